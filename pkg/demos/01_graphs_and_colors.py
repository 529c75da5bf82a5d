"""Walk through the forcing relation and color classes on small graphs.

Run:  python3 demos/01_graphs_and_colors.py
"""
from transor import check_triangle_lemma, color_classes, directly_forces, parse_edge_list

# The paw: one dominating vertex 'a' over the edge bc, plus the pendant d.
paw = parse_edge_list("""
a b
a c
a d
b c
""").graph
print("graph:", paw, "edges:", paw.sorted_edges())

# (a,d) pins down the direction of every other a-edge: the other endpoints
# are non-adjacent, so whichever way ad points, ab and ac must follow.
print("\n(a,d) forces (a,b):", directly_forces(("a", "d"), ("a", "b"), paw))
print("(a,d) forces (a,c):", directly_forces(("a", "d"), ("a", "c"), paw))
print("(a,b) forces (a,c):", directly_forces(("a", "b"), ("a", "c"), paw),
      " (b and c are adjacent, so no forcing)")

print("\ncolor classes (implication classes paired with their reverses):")
for color in color_classes(paw).colors:
    print(f"  color {color.id}: edges={sorted(color.undirected)}"
          f" span={sorted(color.span)} self_inverse={color.self_inverse}")

# An odd hole folds each implication class onto its own reverse, which is
# exactly what makes it non-orientable.
c5 = parse_edge_list("a b\nb c\nc d\nd e\ne a").graph
color = color_classes(c5).colors[0]
print(f"\nC5 has {len(color_classes(c5).colors)} color, self_inverse={color.self_inverse}")

# Every triangle respects the forcing consequences; the checker returns
# the violations it finds, so an empty list is the healthy answer.
print("\ntriangle check on the paw:", check_triangle_lemma(paw))
