"""Modules, strong modules, and the decomposition tree.

Run:  python3 demos/02_decomposition_tree.py
"""
import json

from transor import (
    decomposition_tree,
    is_module,
    is_strong_module,
    maximal_strong_partition,
    parse_edge_list,
    quotient,
    smallest_module,
)

paw = parse_edge_list("a b\na c\na d\nb c").graph

# {b,c} is a module: a sees both, d sees neither.  {a,b} is not: c tells
# its members apart.
print("is_module {b,c}:", is_module(paw, "bc"))
print("is_module {a,b}:", is_module(paw, "ab"))

# Closing {b,d} under splitters: c splits it (adjacent to b, not d), and
# after adding c the outside vertex a is uniform, so {b,c,d} is minimal.
print("smallest module containing {b,d}:", sorted(smallest_module(paw, "bd")))

# {b,c} overlaps no other module, so it is strong; {a,b} is not even a module.
print("is_strong_module {b,c}:", is_strong_module(paw, "bc"))

partition = maximal_strong_partition(paw)
print("\nmaximal strong partition:", [sorted(p) for p in partition])
print("quotient on representatives:", quotient(paw, partition).sorted_edges())


def show(node, depth=0):
    print("  " * depth + f"{node.kind}  {{{','.join(map(str, sorted(node.vertex_set)))}}}")
    for child in node.children:
        show(child, depth + 1)


print("\ndecomposition tree of the paw:")
show(decomposition_tree(paw))

p4 = parse_edge_list("a b\nb c\nc d").graph
print("\ndecomposition tree of the path on four vertices (prime):")
show(decomposition_tree(p4))

print("\ntree as JSON:")
print(json.dumps(decomposition_tree(paw).to_json_dict(), indent=2))
