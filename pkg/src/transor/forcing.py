"""Edge forcing, implication classes, color classes, and comparability testing.

A directed edge (a,b) directly forces (a',b') when they share a tail and the
heads are non-adjacent, or share a head and the tails are non-adjacent.  The
reflexive/transitive closure of that relation partitions the 2|E| directed
edges into implication classes; a class A paired with its reverse A' gives an
undirected color class.  A graph is transitively orientable exactly when no
class meets its own reverse.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import DomainError, InvariantError
from .graph import Graph, spanned_vertices


@dataclass(frozen=True)
class ColorClass:
    """One implication class with its reverse, viewed also as undirected edges.

    ``forward`` is the half containing the lexicographically smallest directed
    edge of the color (the canonical orientation used everywhere downstream);
    ``reverse`` is its mirror.  For a self-inverse class the two coincide.
    """

    id: int
    forward: frozenset
    reverse: frozenset
    undirected: frozenset
    span: frozenset
    self_inverse: bool


@dataclass
class ColorMap:
    """All color classes of a graph plus an edge-to-color lookup."""

    graph: Graph
    colors: tuple[ColorClass, ...]
    edge_to_color: dict = field(repr=False)

    def color_of(self, u, v=None) -> int:
        if v is None:
            u, v = u
        return self.edge_to_color[self.graph.edge_key(u, v)]

    def class_key(self, e: tuple) -> tuple[int, int]:
        """Identity of the implication class holding a directed edge.

        Returns (color id, sign): sign +1 for the forward half, -1 for the
        reverse half, 0 when the color is self-inverse.
        """
        cid = self.color_of(e[0], e[1])
        color = self.colors[cid]
        if color.self_inverse:
            return (cid, 0)
        return (cid, 1 if tuple(e) in color.forward else -1)

    def directed_class(self, key: tuple[int, int]) -> frozenset:
        cid, sign = key
        color = self.colors[cid]
        return color.reverse if sign == -1 else color.forward

    @staticmethod
    def inverse_key(key: tuple[int, int]) -> tuple[int, int]:
        return (key[0], -key[1])


def directly_forces(e1: tuple, e2: tuple, g: Graph) -> bool:
    """True iff directed edge e1 forces e2 in one step (reflexive by convention)."""
    a, b = e1
    a2, b2 = e2
    for x, y in (e1, e2):
        if not g.has_edge(x, y):
            raise DomainError(f"({x!r}, {y!r}) is not an edge of the graph")
    if a == a2 and b == b2:
        return True
    if a == a2:
        return not g.has_edge(b, b2)
    if b == b2:
        return not g.has_edge(a, a2)
    return False


def _force_neighbors(g: Graph, a, b) -> Iterator[tuple]:
    # All directed edges reachable from (a, b) in one forcing step.
    adj_a = g.neighbors(a)
    adj_b = g.neighbors(b)
    for b2 in adj_a:
        if b2 != b and b2 not in adj_b:
            yield (a, b2)
    for a2 in adj_b:
        if a2 != a and a2 not in adj_a:
            yield (a2, b)


def color_classes(g: Graph) -> ColorMap:
    """Partition the directed edges into implication classes and pair them into colors.

    Classes are connected components of the one-step forcing relation over all
    2|E| directed edges.  Directed edges are visited in vertex order, so each
    color's id and its canonical forward half are deterministic.
    """
    idx = g.index
    directed = sorted(
        ((u, v) for e in g.edges for (u, v) in (e, (e[1], e[0]))),
        key=lambda e: (idx[e[0]], idx[e[1]]),
    )
    seen: set = set()
    colors = []
    for start in directed:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            for nxt in _force_neighbors(g, *cur):
                if nxt not in comp:
                    comp.add(nxt)
                    stack.append(nxt)
        forward = frozenset(comp)
        reverse = frozenset((y, x) for x, y in comp)
        if forward & reverse:
            if forward != reverse:
                raise InvariantError(
                    "implication class meets its reverse without equalling it"
                )
            seen |= forward
            self_inverse = True
        else:
            seen |= forward | reverse
            self_inverse = False
        undirected = frozenset(g.edge_key(x, y) for x, y in forward)
        colors.append(
            ColorClass(
                id=len(colors),
                forward=forward,
                reverse=reverse,
                undirected=undirected,
                span=spanned_vertices(undirected),
                self_inverse=self_inverse,
            )
        )
    edge_to_color: dict = {}
    for color in colors:
        for e in color.undirected:
            if e in edge_to_color:
                raise InvariantError("edge assigned to two colors")
            edge_to_color[e] = color.id
    if len(edge_to_color) != g.edge_count:
        raise InvariantError("colors do not cover the edge set")
    return ColorMap(graph=g, colors=tuple(colors), edge_to_color=edge_to_color)


def is_comparability(g: Graph) -> bool:
    """True iff the graph admits a transitive orientation.

    The verdict is the per-color test (no class equals its reverse).  When it
    says yes, one concrete orientation is built from the decomposition tree
    and verified transitive; a failure there is an internal invariant error,
    never a return value.
    """
    cmap = color_classes(g)
    verdict = not any(c.self_inverse for c in cmap.colors)
    if verdict and g.vertex_count:
        from .decomposition import decomposition_tree
        from .orientation import default_choices, is_transitive, materialize

        tree = decomposition_tree(g)
        witness = materialize(g, tree, default_choices(tree))
        if not is_transitive(g, witness):
            raise InvariantError("constructed orientation failed the transitivity check")
    return verdict


@dataclass(frozen=True)
class TriangleViolation:
    """A triangle whose colors break one of the three forcing consequences."""

    triangle: tuple
    clause: str
    detail: str


def check_triangle_lemma(g: Graph) -> list[TriangleViolation]:
    """Check every triangle against the forcing consequences; returns violations.

    For an ordered triangle (a,b,c) with (a,b) in class C, (a,c) in B and
    (b,c) in A, subject to A != B and A != C-inverse, it must hold that
    (i) every (b',c') in A has (a,b') in C and (a,c') in B, (ii) (b',c') in A
    and (a',b') in C imply (a',c') in B, and (iii) a lies outside the span
    of A.  The expected result on any graph is an empty list.
    """
    cmap = color_classes(g)
    idx = g.index
    violations = []
    triangles = []
    for u, v in g.sorted_edges():
        for w in g.vertices:
            if idx[w] > idx[v] and w in g.neighbors(u) and w in g.neighbors(v):
                triangles.append((u, v, w))
    from itertools import permutations

    key_cache: dict = {}

    def key(e):
        if e not in key_cache:
            key_cache[e] = cmap.class_key(e)
        return key_cache[e]

    for tri in triangles:
        for a, b, c in permutations(tri):
            k_c = key((a, b))
            k_b = key((a, c))
            k_a = key((b, c))
            if k_a == k_b or k_a == ColorMap.inverse_key(k_c):
                continue
            class_a = cmap.directed_class(k_a)
            class_c = cmap.directed_class(k_c)
            tails_of_c: dict = {}
            for t, h in class_c:
                tails_of_c.setdefault(h, []).append(t)
            for b2, c2 in class_a:
                if not (g.has_edge(a, b2) and key((a, b2)) == k_c):
                    violations.append(
                        TriangleViolation(tri, "i", f"({a!r},{b2!r}) not in the class of ({a!r},{b!r})")
                    )
                if not (g.has_edge(a, c2) and key((a, c2)) == k_b):
                    violations.append(
                        TriangleViolation(tri, "i", f"({a!r},{c2!r}) not in the class of ({a!r},{c!r})")
                    )
                for a2 in tails_of_c.get(b2, ()):
                    if not (g.has_edge(a2, c2) and key((a2, c2)) == k_b):
                        violations.append(
                            TriangleViolation(tri, "ii", f"({a2!r},{c2!r}) not in the class of ({a!r},{c!r})")
                        )
            if a in cmap.colors[k_a[0]].span:
                violations.append(
                    TriangleViolation(tri, "iii", f"{a!r} lies in the span of the class of ({b!r},{c!r})")
                )
    return violations
