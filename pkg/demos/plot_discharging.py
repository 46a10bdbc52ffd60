"""
Charges on a plane graph
========================

Vertices start at 2d - 6 and faces at length - 6, which sums to -12 on any
connected plane graph. Big faces then pay their 2-vertices and triangles.
"""

from sqcolor import apply_rules, audit, build_graph, find_planar_embedding, initial_charges, spacing_max_marks

# A triangle closed off by a long path: one 8-face and one 9-face.
g = build_graph(9, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 0)])
e = find_planar_embedding(g)
before = initial_charges(e)
after = apply_rules(e, before)
print("face lengths:", e.face_lengths())
print("face charges before:", [str(x) for x in before.face_charge])
print("face charges after: ", [str(x) for x in after.face_charge])
print("totals:", before.total(), after.total())

# The audit lists the structural properties that fail.
r = audit(e)
print("failed predicates:", [k for k, ok in r.predicates.items() if not ok])
print("negative vertices:", r.negative_vertices, "negative faces:", r.negative_faces)

# How many 2-vertices and triangles can share one face boundary?
print("max marks:", {length: spacing_max_marks(length) for length in range(7, 17)})
