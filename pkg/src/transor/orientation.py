"""Exact counting and deterministic enumeration of all transitive orientations.

Orientations decompose along the tree: a series node contributes one choice
of child order (k! options, edges point from earlier to later blocks), a
prime node contributes a binary choice between the two halves of its
quotient's single color class, and the choices at different nodes never
interact.  The count is therefore a product, and enumeration is the cartesian
product of per-node choices in a fixed lexicographic order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator

from .decomposition import DecompositionNode, PRIME, SERIES, decomposition_tree
from .errors import DomainError, InvariantError, OracleScaleError
from .forcing import color_classes, is_comparability
from .graph import Graph


@dataclass(frozen=True)
class Orientation:
    """A full assignment of one direction per edge of a host graph."""

    directed: frozenset

    def direction_of(self, u, v) -> tuple:
        if (u, v) in self.directed:
            return (u, v)
        if (v, u) in self.directed:
            return (v, u)
        raise DomainError(f"edge {u!r},{v!r} is not oriented here")

    def sorted_pairs(self) -> list[tuple]:
        return sorted(self.directed)

    def to_json(self) -> list[list[str]]:
        return [[str(t), str(h)] for t, h in self.sorted_pairs()]

    @classmethod
    def from_pairs(cls, g: Graph, pairs: Iterable) -> "Orientation":
        """Build from (tail, head) pairs whose tokens may be strings of g's vertices."""
        by_name = {str(v): v for v in g.vertices}
        if len(by_name) != g.vertex_count:
            raise DomainError("vertex names are ambiguous under str()")
        directed = set()
        for pair in pairs:
            t, h = pair
            tail = by_name.get(str(t))
            head = by_name.get(str(h))
            if tail is None or head is None:
                raise DomainError(f"unknown vertex in pair {pair!r}")
            if not g.has_edge(tail, head):
                raise DomainError(f"{pair!r} is not an edge of the graph")
            directed.add((tail, head))
        o = cls(frozenset(directed))
        _validate_domain(g, o)
        return o


@dataclass(frozen=True)
class NodeChoice:
    """The local decision at one tree node.

    Series nodes carry a permutation of child indices (position in the tuple
    is the block's place in the linear order); prime nodes carry a flag that
    selects the reverse half of the quotient color instead of the canonical
    forward half.
    """

    path: tuple[int, ...]
    permutation: tuple[int, ...] | None = None
    use_reverse: bool | None = None


def _validate_domain(g: Graph, o: Orientation) -> None:
    undirected = set()
    for t, h in o.directed:
        if not g.has_edge(t, h):
            raise DomainError(f"({t!r},{h!r}) is not an edge of the graph")
        undirected.add(g.edge_key(t, h))
    if len(o.directed) != g.edge_count or undirected != set(g.edges):
        raise DomainError("orientation does not cover each edge exactly once")


def is_transitive(g: Graph, o: Orientation) -> bool:
    """True iff every directed path x->y->z closes with the edge x->z."""
    _validate_domain(g, o)
    succ: dict = {v: set() for v in g.vertices}
    for t, h in o.directed:
        succ[t].add(h)
    for t, h in o.directed:
        if not succ[h] <= succ[t]:
            return False
    return True


class _LiftPlan:
    """Per-node cross-edge blocks, precomputed once per tree for fast lifting."""

    __slots__ = ("entries",)

    def __init__(self, g: Graph, tree: DecompositionNode):
        blocks: dict[tuple[int, ...], dict[tuple[int, int], list]] = {}
        for u, v in g.sorted_edges():
            node = tree
            path: tuple[int, ...] = ()
            while True:
                iu = iv = -1
                for i, child in enumerate(node.children):
                    if u in child.vertex_set:
                        iu = i
                    if v in child.vertex_set:
                        iv = i
                if iu != iv:
                    pair = (iu, iv) if iu < iv else (iv, iu)
                    e = (u, v) if iu < iv else (v, u)
                    blocks.setdefault(path, {}).setdefault(pair, []).append(e)
                    break
                node = node.children[iu]
                path = path + (iu,)
        # entries: path -> (kind, child count, block list, prime color halves)
        self.entries: dict[tuple[int, ...], tuple] = {}
        for path, node in tree.walk_with_paths():
            if node.kind not in (SERIES, PRIME):
                continue
            pair_blocks = blocks.get(path, {})
            if node.kind == SERIES:
                self.entries[path] = (SERIES, len(node.children), pair_blocks, None)
            else:
                qmap = color_classes(node.quotient)
                if len(qmap.colors) != 1:
                    raise InvariantError("prime quotient does not have a single color")
                color = qmap.colors[0]
                if color.self_inverse:
                    raise DomainError("prime quotient is not transitively orientable")
                reps = [min(child.vertex_set) for child in node.children]
                dirs = {}
                for (i, j), _ in pair_blocks.items():
                    dirs[(i, j)] = (reps[i], reps[j]) in color.forward
                self.entries[path] = (PRIME, len(node.children), pair_blocks, dirs)

    def apply(self, choices: Iterable[NodeChoice]) -> Orientation:
        chosen = {c.path: c for c in choices}
        if set(chosen) != set(self.entries):
            missing = set(self.entries) - set(chosen)
            extra = set(chosen) - set(self.entries)
            raise DomainError(
                f"choices do not match the tree (missing {sorted(missing)}, extra {sorted(extra)})"
            )
        directed = []
        for path, (kind, k, pair_blocks, dirs) in self.entries.items():
            choice = chosen[path]
            if kind == SERIES:
                perm = choice.permutation
                if perm is None or sorted(perm) != list(range(k)):
                    raise DomainError(f"series node {path} needs a permutation of {k} children")
                pos = {child: rank for rank, child in enumerate(perm)}
                for (i, j), es in pair_blocks.items():
                    if pos[i] < pos[j]:
                        directed.extend(es)
                    else:
                        directed.extend((v, u) for u, v in es)
            else:
                if choice.use_reverse is None:
                    raise DomainError(f"prime node {path} needs a direction flag")
                flip = choice.use_reverse
                for (i, j), es in pair_blocks.items():
                    forward = dirs[(i, j)] != flip
                    if forward:
                        directed.extend(es)
                    else:
                        directed.extend((v, u) for u, v in es)
        return Orientation(frozenset(directed))


def default_choices(tree: DecompositionNode) -> list[NodeChoice]:
    """The lexicographically first choice at every series/prime node."""
    out = []
    for path, node in tree.walk_with_paths():
        if node.kind == SERIES:
            out.append(NodeChoice(path, permutation=tuple(range(len(node.children)))))
        elif node.kind == PRIME:
            out.append(NodeChoice(path, use_reverse=False))
    return out


def materialize(g: Graph, tree: DecompositionNode, choices: Iterable[NodeChoice]) -> Orientation:
    """Turn one choice per series/prime node into a concrete orientation.

    Series blocks are directed from earlier to later children in the chosen
    permutation; prime blocks copy the direction their quotient edge takes in
    the chosen half of the quotient's color class.
    """
    return _LiftPlan(g, tree).apply(choices)


def count_orientations(g: Graph) -> int:
    """Exact number of transitive orientations, as an arbitrary-precision int."""
    if g.vertex_count == 0:
        return 1
    if not is_comparability(g):
        return 0
    tree = decomposition_tree(g)
    total = 1
    for node in tree.walk():
        if node.kind == SERIES:
            total *= factorial(len(node.children))
        elif node.kind == PRIME:
            total *= 2
    return total


def _choice_space(tree: DecompositionNode) -> list[tuple[tuple[int, ...], str, int]]:
    return [
        (path, node.kind, len(node.children))
        for path, node in tree.walk_with_paths()
        if node.kind in (SERIES, PRIME)
    ]


def enumerate_orientations(
    g: Graph,
    limit: int | None = None,
    *,
    shuffle: random.Random | None = None,
) -> Iterator[Orientation]:
    """Stream every transitive orientation in a fixed lexicographic order.

    Nodes are visited in tree pre-order; series permutations run in
    lexicographic order of child representatives and prime nodes emit the
    canonical half before its reverse.  A non-comparability graph yields an
    empty stream.  The cartesian product is generated lazily, so a ``limit``
    makes even astronomically large spaces cheap.
    """
    if limit is not None and limit <= 0:
        return
    if g.vertex_count == 0:
        yield Orientation(frozenset())
        return
    if not is_comparability(g):
        return
    tree = decomposition_tree(g, shuffle=shuffle)
    plan = _LiftPlan(g, tree)
    space = _choice_space(tree)

    def combos(i: int) -> Iterator[tuple[NodeChoice, ...]]:
        if i == len(space):
            yield ()
            return
        path, kind, k = space[i]
        if kind == SERIES:
            options: Iterable[NodeChoice] = (
                NodeChoice(path, permutation=perm) for perm in permutations(range(k))
            )
        else:
            options = (NodeChoice(path, use_reverse=flag) for flag in (False, True))
        for head in options:
            for tail in combos(i + 1):
                yield (head,) + tail

    emitted = 0
    for combo in combos(0):
        yield plan.apply(combo)
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def strong_modules_of_order(g: Graph, o: Orientation) -> set[frozenset]:
    """Strong modules of a transitive orientation, by exhaustive subset scan.

    A set is a directed module when every external vertex relates uniformly
    to it in each direction separately; strong means overlapped by no other
    directed module.  Test-support operation, capped at 10 vertices.
    """
    n = g.vertex_count
    if n > 10:
        raise OracleScaleError(f"directed strong modules limited to 10 vertices, got {n}")
    if not is_transitive(g, o):
        raise DomainError("orientation is not transitive")
    idx = g.index
    out = [0] * n
    into = [0] * n
    for t, h in o.directed:
        out[idx[t]] |= 1 << idx[h]
        into[idx[h]] |= 1 << idx[t]
    full = (1 << n) - 1
    modules = []
    for x in range(1, full + 1):
        ext = full & ~x
        ok = True
        e = ext
        while e:
            b = e & -e
            i = b.bit_length() - 1
            t = out[i] & x
            if t and t != x:
                ok = False
                break
            t = into[i] & x
            if t and t != x:
                ok = False
                break
            e ^= b
        if ok:
            modules.append(x)
    strong = []
    for x in modules:
        if not any((x & y) and (x & ~y) and (y & ~x) for y in modules):
            strong.append(x)
    return {g.unmask(x) for x in strong}
