"""Command-line front door.

Exit codes: 0 success (check/verify: verdict true), 1 negative verdict,
2 oracle disagreement, 64 bad input, 65 oracle-scale refusal.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .decomposition import PRIME, SERIES, decomposition_tree
from .errors import DomainError, OracleScaleError, ParseError, TransorError
from .forcing import color_classes, is_comparability
from .graph import Graph
from .io import parse_graph
from .multiplex import multiplex_partition
from .oracle import (
    MAX_ORACLE_EDGES,
    MAX_ORACLE_VERTICES,
    brute_force_orientations,
    brute_force_strong_modules,
)
from .orientation import Orientation, count_orientations, enumerate_orientations, is_transitive


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    parsed = parse_graph(_read_input(path))
    if parsed.duplicate_edges:
        noun = "line" if parsed.duplicate_edges == 1 else "lines"
        print(
            f"warning: {parsed.duplicate_edges} duplicate edge {noun} collapsed",
            file=sys.stderr,
        )
    if parsed.graph.vertex_count == 0:
        raise DomainError("input declares no vertices")
    return parsed.graph


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _tree_to_dot(tree) -> str:
    lines = ["digraph decomposition {", "  node [shape=box];"]
    names = {}
    for i, (path, node) in enumerate(tree.walk_with_paths()):
        names[path] = f"n{i}"
        label = node.kind
        if node.kind in (SERIES, PRIME):
            rank = len(node.children) - 1 if node.kind == SERIES else 1
            label += f" rank={rank}"
        label += "\\n{" + ",".join(str(v) for v in sorted(node.vertex_set)) + "}"
        lines.append(f'  n{i} [label="{label}"];')
    for path, node in tree.walk_with_paths():
        for i in range(len(node.children)):
            lines.append(f"  {names[path]} -> {names[path + (i,)]};")
    lines.append("}")
    return "\n".join(lines)


def _cmd_colors(args) -> int:
    g = _load_graph(args.input)
    cmap = color_classes(g)
    payload = {
        "colors": [
            {
                "id": c.id,
                "edges": [[str(u), str(v)] for u, v in sorted(c.undirected)],
                "span": [str(v) for v in sorted(c.span)],
                "self_inverse": c.self_inverse,
            }
            for c in cmap.colors
        ]
    }
    print(_dump(payload))
    return 0


def _cmd_decompose(args) -> int:
    g = _load_graph(args.input)
    shuffle = random.Random(args.seed) if args.seed is not None else None
    tree = decomposition_tree(g, shuffle=shuffle)
    if args.dot:
        print(_tree_to_dot(tree))
    else:
        print(_dump(tree.to_json_dict()))
    return 0


def _cmd_multiplexes(args) -> int:
    g = _load_graph(args.input)
    tree = decomposition_tree(g)
    payload = {"multiplexes": [m.to_json_dict() for m in multiplex_partition(g, tree)]}
    print(_dump(payload))
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args.input)
    if args.oracle:
        verdict = len(brute_force_orientations(g)) > 0
    else:
        verdict = is_comparability(g)
    print(f"comparability: {'true' if verdict else 'false'}")
    return 0 if verdict else 1


def _cmd_count(args) -> int:
    g = _load_graph(args.input)
    if args.oracle:
        print(len(brute_force_orientations(g)))
    else:
        print(count_orientations(g))
    return 0


def _cmd_enumerate(args) -> int:
    g = _load_graph(args.input)
    if args.oracle:
        stream = iter(brute_force_orientations(g))
        if args.limit is not None:
            import itertools

            stream = itertools.islice(stream, args.limit)
    else:
        shuffle = random.Random(args.seed) if args.seed is not None else None
        stream = enumerate_orientations(g, limit=args.limit, shuffle=shuffle)
    for o in stream:
        print(_dump(o.to_json()))
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.input)
    try:
        pairs = json.loads(_read_input(args.orientation))
    except json.JSONDecodeError as exc:
        raise ParseError(f"orientation file is not valid JSON: {exc}") from None
    if not isinstance(pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in pairs
    ):
        raise ParseError("orientation file must be a JSON list of [tail, head] pairs")
    try:
        o = Orientation.from_pairs(g, pairs)
    except DomainError as exc:
        raise ParseError(str(exc)) from None
    verdict = is_transitive(g, o)
    print(f"transitive: {'true' if verdict else 'false'}")
    return 0 if verdict else 1


def _cmd_oracle_compare(args) -> int:
    g = _load_graph(args.input)
    if g.edge_count > MAX_ORACLE_EDGES or g.vertex_count > MAX_ORACLE_VERTICES:
        raise OracleScaleError(
            f"oracle comparison limited to {MAX_ORACLE_VERTICES} vertices"
            f" and {MAX_ORACLE_EDGES} edges"
        )
    truth = brute_force_orientations(g)
    count = count_orientations(g)
    fast = list(enumerate_orientations(g))

    def fail(check: str, detail) -> int:
        print(_dump({"check": check, "counterexample": detail}))
        return 2

    if count != len(truth):
        return fail("count", {"fast": str(count), "oracle": len(truth)})
    truth_set = set(truth)
    fast_set = set(fast)
    if fast_set != truth_set:
        missing = next(iter(truth_set - fast_set), None)
        extra = next(iter(fast_set - truth_set), None)
        return fail(
            "orientations",
            {
                "missing": missing.to_json() if missing else None,
                "extra": extra.to_json() if extra else None,
            },
        )
    verdict = is_comparability(g)
    if verdict != (len(truth) > 0):
        return fail("comparability", {"fast": verdict, "oracle": len(truth) > 0})
    tree_sets = {node.vertex_set for node in decomposition_tree(g).walk()}
    oracle_strong = brute_force_strong_modules(g)
    if tree_sets != oracle_strong:
        diff = tree_sets.symmetric_difference(oracle_strong)
        return fail(
            "strong_modules", {"difference": [sorted(map(str, s)) for s in diff]}
        )
    print(
        f"agreement: {len(truth)} orientations,"
        f" {len(oracle_strong)} strong modules, comparability {str(verdict).lower()}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transor",
        description="Decompose a graph, inspect forcing colors, and count or"
        " enumerate its transitive orientations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("input", help="graph file (edge list or DIMACS), or - for stdin")
        p.set_defaults(func=func)
        return p

    add("colors", _cmd_colors, help="list color classes with spans").add_argument(
        "--json", action="store_true", help="JSON output (the default)"
    )
    p = add("decompose", _cmd_decompose, help="print the decomposition tree")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.add_argument("--seed", type=int, help="shuffle internal scan order (output must not change)")
    add("multiplexes", _cmd_multiplexes, help="print the maximal multiplex partition").add_argument(
        "--json", action="store_true", help="JSON output (the default)"
    )
    p = add("check", _cmd_check, help="decide comparability (exit 0 yes, 1 no)")
    p.add_argument("--oracle", action="store_true", help="use the brute-force oracle")
    p = add("count", _cmd_count, help="count transitive orientations exactly")
    p.add_argument("--oracle", action="store_true", help="use the brute-force oracle")
    p = add("enumerate", _cmd_enumerate, help="stream orientations, one JSON line each")
    p.add_argument("--limit", type=int, help="stop after N orientations")
    p.add_argument("--oracle", action="store_true", help="use the brute-force oracle")
    p.add_argument("--seed", type=int, help="shuffle internal scan order (output must not change)")
    p = add("verify", _cmd_verify, help="check a stored orientation for transitivity")
    p.add_argument("--orientation", required=True, help="JSON file of [tail, head] pairs")
    add("oracle-compare", _cmd_oracle_compare, help="fast path vs oracle (exit 2 on mismatch)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 64
    except OracleScaleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 65
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 64
    except BrokenPipeError:
        return 0
    except TransorError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 70


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
