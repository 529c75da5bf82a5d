"""Modules (partitive sets), strong modules, and the recursive decomposition tree.

A module is a vertex set whose members look identical from outside: every
external vertex is adjacent to all of it or none of it.  A strong module
overlaps no other module, so the strong modules form a laminar family; the
tree below records it, with each internal node tagged by the shape of its
quotient (edgeless, complete, or indecomposable).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError, InvariantError
from .graph import Graph, complement, connected_components, induced_subgraph

LEAF = "leaf"
PARALLEL = "parallel"
SERIES = "series"
PRIME = "prime"


@dataclass(frozen=True)
class StrongPartition:
    """The unique partition of a graph into maximal proper strong modules."""

    parts: tuple[frozenset, ...]

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class DecompositionNode:
    """One node of the decomposition tree: a strong module and its split.

    ``children`` partition ``vertex_set`` and are ordered by smallest vertex;
    ``quotient`` is the graph induced on one representative per child (the
    smallest vertex of each), present on internal nodes only.
    """

    vertex_set: frozenset
    kind: str
    children: tuple["DecompositionNode", ...]
    quotient: Graph | None

    def walk(self) -> Iterator["DecompositionNode"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def walk_with_paths(self, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], "DecompositionNode"]]:
        yield path, self
        for i, child in enumerate(self.children):
            yield from child.walk_with_paths(path + (i,))

    def node_at(self, path: tuple[int, ...]) -> "DecompositionNode":
        node = self
        for i in path:
            node = node.children[i]
        return node

    @property
    def representatives(self) -> list:
        """The smallest vertex of each child; these are the quotient's vertices."""
        return [min(child.vertex_set) for child in self.children]

    def to_json_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in sorted(self.vertex_set)],
            "kind": self.kind,
            "children": [c.to_json_dict() for c in self.children],
        }


def is_module(g: Graph, sub: Iterable) -> bool:
    """True iff every external vertex is adjacent to all of the set or none of it."""
    xs = frozenset(sub)
    for v in xs:
        if not g.has_vertex(v):
            raise DomainError(f"vertex {v!r} is not in the graph")
    if len(xs) <= 1 or len(xs) == g.vertex_count:
        return True
    masks = g.adjacency_masks()
    x = g.mask_of(xs)
    full = (1 << g.vertex_count) - 1
    ext = full & ~x
    while ext:
        b = ext & -ext
        t = masks[b.bit_length() - 1] & x
        if t and t != x:
            return False
        ext ^= b
    return True


def _close_seed(masks: list[int], full: int, x: int) -> int:
    # Grow a vertex mask to the smallest module containing it.  Any external
    # vertex adjacent to some but not all members must join; batching a whole
    # round of such vertices keeps the result independent of scan order.
    while True:
        added = 0
        ext = full & ~x
        while ext:
            b = ext & -ext
            t = masks[b.bit_length() - 1] & x
            if t and t != x:
                added |= b
            ext ^= b
        if not added:
            return x
        x |= added


def smallest_module(g: Graph, seed: Iterable) -> frozenset:
    """The inclusion-minimal module containing the seed vertices."""
    xs = frozenset(seed)
    if not xs:
        raise DomainError("seed must contain at least one vertex")
    for v in xs:
        if not g.has_vertex(v):
            raise DomainError(f"vertex {v!r} is not in the graph")
    full = (1 << g.vertex_count) - 1
    return g.unmask(_close_seed(g.adjacency_masks(), full, g.mask_of(xs)))


def maximal_strong_partition(g: Graph, *, shuffle: random.Random | None = None) -> StrongPartition:
    """The unique partition of V into maximal strong modules different from V.

    Three exclusive cases: a disconnected graph splits into its connected
    components; a graph with disconnected complement splits into the
    co-components; otherwise the proper modules closed from vertex pairs are
    merged while any two of them overlap, and the merged sets (plus leftover
    singletons) are the partition.  ``shuffle`` only perturbs internal scan
    order; the result is order-independent and tests rely on that.
    """
    n = g.vertex_count
    if n < 2:
        raise DomainError("partition needs at least two vertices")
    comps = connected_components(g)
    if len(comps) > 1:
        return StrongPartition(tuple(comps))
    co = connected_components(complement(g))
    if len(co) > 1:
        return StrongPartition(tuple(sorted(co, key=lambda c: g.index[min(c)])))
    masks = g.adjacency_masks()
    full = (1 << n) - 1
    pairs = list(combinations(range(n), 2))
    if shuffle is not None:
        shuffle.shuffle(pairs)
    family: list[int] = []
    for i, j in pairs:
        seed = (1 << i) | (1 << j)
        if any(seed & ~m == 0 for m in family):
            continue
        cand = _close_seed(masks, full, seed)
        if cand == full:
            continue
        while True:
            hit = next((m for m in family if m & cand), None)
            if hit is None:
                break
            cand |= hit
            family.remove(hit)
        if cand == full:
            raise InvariantError(
                "overlapping proper modules merged to the whole vertex set"
            )
        family.append(cand)
    covered = 0
    for m in family:
        covered |= m
    parts = [g.unmask(m) for m in family]
    rest = full & ~covered
    while rest:
        b = rest & -rest
        parts.append(frozenset((g.vertices[b.bit_length() - 1],)))
        rest ^= b
    parts.sort(key=lambda p: g.index[min(p)])
    return StrongPartition(tuple(parts))


def quotient(g: Graph, partition) -> Graph:
    """Graph on one representative (smallest vertex) per part of a module partition."""
    parts = [frozenset(p) for p in partition]
    seen: set = set()
    for p in parts:
        if not p:
            raise DomainError("empty part in partition")
        if p & seen:
            raise DomainError("parts are not disjoint")
        seen |= p
        if not is_module(g, p):
            raise DomainError(f"part {sorted(p)!r} is not a module")
    if len(seen) != g.vertex_count:
        raise DomainError("parts do not cover the vertex set")
    reps = [min(p) for p in parts]
    edges = [
        (u, v)
        for u, v in combinations(reps, 2)
        if g.has_edge(u, v)
    ]
    return Graph(reps, edges)


def decomposition_tree(g: Graph, *, shuffle: random.Random | None = None) -> DecompositionNode:
    """Recursive decomposition into strong modules, deterministic child order."""
    if g.vertex_count == 0:
        raise DomainError("cannot decompose an empty vertex set")
    if g.vertex_count == 1:
        return DecompositionNode(frozenset(g.vertices), LEAF, (), None)
    partition = maximal_strong_partition(g, shuffle=shuffle)
    q = quotient(g, partition)
    k = len(partition)
    if q.edge_count == 0:
        kind = PARALLEL
    elif q.edge_count == k * (k - 1) // 2:
        kind = SERIES
    else:
        kind = PRIME
    children = tuple(
        decomposition_tree(induced_subgraph(g, part), shuffle=shuffle)
        for part in partition
    )
    return DecompositionNode(frozenset(g.vertices), kind, children, q)


def is_strong_module(g: Graph, sub: Iterable) -> bool:
    """True iff the set is a module overlapped by no other module.

    Implemented as membership among the decomposition tree's node sets (plus
    the trivial sets); tests verify this against the brute-force definition.
    """
    xs = frozenset(sub)
    for v in xs:
        if not g.has_vertex(v):
            raise DomainError(f"vertex {v!r} is not in the graph")
    if not is_module(g, xs):
        return False
    if len(xs) <= 1 or len(xs) == g.vertex_count:
        return True
    tree = decomposition_tree(g)
    return any(node.vertex_set == xs for node in tree.walk())
