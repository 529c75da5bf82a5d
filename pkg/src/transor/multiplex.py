"""Multiplices: the edge sets crossing one decomposition node, grouped by color.

The edges joining distinct children of a series or prime node form a
multiplex: a union of whole color classes whose span is exactly that node's
vertex set.  Taken over the tree these edge sets partition E, and each one is
maximal (its span is a strong module).  A single color is itself a multiplex
of rank 1, which is what the extension test below probes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .decomposition import DecompositionNode, PRIME, SERIES, is_strong_module
from .errors import DomainError, InvariantError
from .forcing import ColorMap, color_classes
from .graph import Graph


@dataclass(frozen=True)
class Multiplex:
    """A set of colors crossing one tree node (or a single free-standing color).

    ``node``/``node_path`` locate the generating tree node; both are None for
    a bare one-color multiplex.  ``edges`` is the union of the colors'
    undirected edge sets and ``span`` the vertices they touch.
    """

    span: frozenset
    colors: frozenset
    edges: frozenset
    rank: int
    node: DecompositionNode | None = None
    node_path: tuple[int, ...] | None = None

    def to_json_dict(self) -> dict:
        return {
            "node_path": list(self.node_path) if self.node_path is not None else None,
            "rank": self.rank,
            "colors": sorted(self.colors),
            "edges": [[str(u), str(v)] for u, v in sorted(self.edges)],
        }


def multiplex_partition(g: Graph, tree: DecompositionNode, cmap: ColorMap | None = None) -> list[Multiplex]:
    """One multiplex per series/prime node; their edge sets partition E.

    Every edge is charged to the unique node whose children separate its
    endpoints.  Parallel nodes can receive nothing (their children are
    disconnected from each other), so only series and prime nodes appear.
    """
    if cmap is None:
        cmap = color_classes(g)
    node_edges: dict[tuple[int, ...], list] = {}
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
            if iu < 0 or iv < 0:
                raise InvariantError("edge endpoint missing from the tree")
            if iu != iv:
                node_edges.setdefault(path, []).append((u, v))
                break
            node = node.children[iu]
            path = path + (iu,)
    result = []
    assigned = 0
    for path, node in tree.walk_with_paths():
        edges = node_edges.get(path)
        if node.kind not in (SERIES, PRIME):
            if edges:
                raise InvariantError(f"{node.kind} node received crossing edges")
            continue
        if not edges:
            raise InvariantError(f"{node.kind} node received no crossing edges")
        assigned += len(edges)
        colors = frozenset(cmap.color_of(u, v) for u, v in edges)
        rank = len(node.children) - 1 if node.kind == SERIES else 1
        result.append(
            Multiplex(
                span=node.vertex_set,
                colors=colors,
                edges=frozenset(g.edge_key(u, v) for u, v in edges),
                rank=rank,
                node=node,
                node_path=path,
            )
        )
    if assigned != g.edge_count:
        raise InvariantError("multiplex edge sets do not cover E")
    return result


def color_multiplex(g: Graph, cmap: ColorMap, color_id: int) -> Multiplex:
    """The rank-1 multiplex generated by a single edge of the given color."""
    color = cmap.colors[color_id]
    return Multiplex(
        span=color.span,
        colors=frozenset((color_id,)),
        edges=color.undirected,
        rank=1,
    )


def is_maximal_multiplex(g: Graph, m: Multiplex) -> bool:
    """A multiplex is maximal exactly when its span is a strong module."""
    return is_strong_module(g, m.span)


def simplex_extension_exists(g: Graph, m: Multiplex, a, cmap: ColorMap | None = None) -> bool:
    """Can a vertex outside the span extend the generating simplex by one vertex?

    True iff the vertex reaches the span through at least two distinct colors
    that the multiplex does not already contain.
    """
    if not g.has_vertex(a):
        raise DomainError(f"vertex {a!r} is not in the graph")
    if a in m.span:
        raise DomainError(f"vertex {a!r} lies inside the multiplex span")
    if cmap is None:
        cmap = color_classes(g)
    fresh: set[int] = set()
    for b in g.neighbors(a):
        if b in m.span:
            cid = cmap.color_of(a, b)
            if cid not in m.colors:
                fresh.add(cid)
                if len(fresh) >= 2:
                    return True
    return False
