"""Immutable undirected simple graphs and the basic operations everything else builds on.

Vertices are opaque tokens with a total order (strings, ints, ...); one graph
never mixes incomparable token types.  The sorted vertex tuple defines a dense
internal index used for deterministic tie-breaking; the index never appears in
any output.
"""
from __future__ import annotations

from typing import Any, Iterable, NamedTuple

from .errors import DomainError


class DirectedEdge(NamedTuple):
    """One chosen direction of an undirected edge."""

    tail: Any
    head: Any

    def reversed(self) -> "DirectedEdge":
        return DirectedEdge(self.head, self.tail)


class Graph:
    """Undirected simple graph: ordered vertex tokens plus a set of 2-element edges.

    Instances are immutable after construction and safe to share between
    threads.  Self-loops are rejected; duplicate edges collapse silently
    (parsers count duplicates themselves when a warning is wanted).
    """

    __slots__ = ("vertices", "edges", "index", "_adj", "_masks", "_hash")

    def __init__(self, vertices: Iterable, edges: Iterable[tuple] = ()):
        try:
            vs = sorted(set(vertices))
        except TypeError:
            raise DomainError("vertex tokens must share a total order") from None
        index = {v: i for i, v in enumerate(vs)}
        adj: dict = {v: set() for v in vs}
        canon = set()
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u!r}")
            if u not in index or v not in index:
                missing = u if u not in index else v
                raise DomainError(f"edge endpoint {missing!r} is not a declared vertex")
            a, b = (u, v) if index[u] < index[v] else (v, u)
            canon.add((a, b))
            adj[a].add(b)
            adj[b].add(a)
        self.vertices = tuple(vs)
        self.index = index
        self.edges = frozenset(canon)
        self._adj = {v: frozenset(s) for v, s in adj.items()}
        self._masks: list[int] | None = None
        self._hash: int | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_vertex(self, v) -> bool:
        return v in self.index

    def has_edge(self, u, v) -> bool:
        """True iff uv is an edge.  Unknown vertices are a domain error."""
        a = self._adj.get(u)
        if a is None or v not in self.index:
            missing = u if u not in self.index else v
            raise DomainError(f"unknown vertex {missing!r}")
        return v in a

    def neighbors(self, v) -> frozenset:
        a = self._adj.get(v)
        if a is None:
            raise DomainError(f"unknown vertex {v!r}")
        return a

    def edge_key(self, u, v) -> tuple:
        """Canonical (smaller, larger) form of an edge, by vertex order."""
        return (u, v) if self.index[u] < self.index[v] else (v, u)

    def sorted_edges(self) -> list[tuple]:
        return sorted(self.edges, key=lambda e: (self.index[e[0]], self.index[e[1]]))

    def adjacency_masks(self) -> list[int]:
        """Neighbor bitmasks aligned with the vertex index (internal tie-breaker order)."""
        if self._masks is None:
            masks = [0] * len(self.vertices)
            for v, nbrs in self._adj.items():
                m = 0
                for w in nbrs:
                    m |= 1 << self.index[w]
                masks[self.index[v]] = m
            self._masks = masks
        return self._masks

    def mask_of(self, sub: Iterable) -> int:
        m = 0
        for v in sub:
            m |= 1 << self.index[v]
        return m

    def unmask(self, mask: int) -> frozenset:
        out = []
        while mask:
            b = mask & -mask
            out.append(self.vertices[b.bit_length() - 1])
            mask ^= b
        return frozenset(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


def induced_subgraph(g: Graph, sub: Iterable) -> Graph:
    """Subgraph on a vertex subset, keeping exactly the edges with both ends inside."""
    xs = frozenset(sub)
    for v in xs:
        if not g.has_vertex(v):
            raise DomainError(f"vertex {v!r} is not in the graph")
    edges = [e for e in g.edges if e[0] in xs and e[1] in xs]
    return Graph(xs, edges)


def complement(g: Graph) -> Graph:
    """Same vertices; an edge exactly where the input has none."""
    vs = g.vertices
    edges = []
    for i, u in enumerate(vs):
        nbrs = g.neighbors(u)
        for v in vs[i + 1:]:
            if v not in nbrs:
                edges.append((u, v))
    return Graph(vs, edges)


def connected_components(g: Graph) -> list[frozenset]:
    """Maximal connected vertex sets, ordered by their smallest member."""
    seen: set = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        stack = [v]
        comp = {v}
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    seen.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def spanned_vertices(edge_set: Iterable) -> frozenset:
    """All endpoints touched by a set of (directed or undirected) edges."""
    out = set()
    for a, b in edge_set:
        out.add(a)
        out.add(b)
    return frozenset(out)
