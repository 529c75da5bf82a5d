"""Multiplices: how the edge set partitions along the decomposition tree.

Run:  python3 demos/03_multiplexes.py
"""
from transor import (
    color_classes,
    color_multiplex,
    decomposition_tree,
    is_maximal_multiplex,
    multiplex_partition,
    parse_edge_list,
    simplex_extension_exists,
)

paw = parse_edge_list("a b\na c\na d\nb c").graph
tree = decomposition_tree(paw)

print("multiplex partition of the paw:")
for m in multiplex_partition(paw, tree):
    print(f"  at node {m.node_path}: rank={m.rank} colors={sorted(m.colors)}"
          f" edges={sorted(m.edges)} span={sorted(m.span)}")

# A triangle is one simplex of rank 2: three pairwise differently colored
# edges, so the whole edge set is a single multiplex.
k3 = parse_edge_list("a b\na c\nb c").graph
m = multiplex_partition(k3, decomposition_tree(k3))[0]
print(f"\nK3: one multiplex, rank={m.rank}, colors={sorted(m.colors)}")

# A single color is always a multiplex of rank 1, but not necessarily a
# maximal one: inside K3 the edge ab extends through c with two fresh colors.
cmap = color_classes(k3)
single = color_multiplex(k3, cmap, cmap.color_of("a", "b"))
print("single edge {a,b} of K3 is maximal:", is_maximal_multiplex(k3, single))
print("  ...because c extends it:", simplex_extension_exists(k3, single, "c", cmap))

# In the paw the color {bc} cannot be extended by a: both edges from a land
# in one and the same color, and a simplex needs two fresh ones.
pmap = color_classes(paw)
bc = color_multiplex(paw, pmap, pmap.color_of("b", "c"))
print("paw color {bc} extended by a:", simplex_extension_exists(paw, bc, "a", pmap))
print("paw color {bc} is maximal:", is_maximal_multiplex(paw, bc))
