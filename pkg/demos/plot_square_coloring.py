"""
Squares of small graphs and their chromatic numbers
====================================================

Two vertices conflict in the square when they are at distance at most two.
"""

from sqcolor import build_graph, chromatic_number, cycle_graph, square

# Squaring C7 joins every vertex to its four nearest vertices on the cycle.
sq = square(cycle_graph(7))
print("C7^2 has", sq.m, "edges and max degree", sq.max_degree)

# Seven vertices cannot be split into three classes of size at most two,
# so four colors are needed; C6^2 splits evenly.
for k in (6, 7, 8, 9):
    print(f"chi(C{k}^2) =", chromatic_number(square(cycle_graph(k))))

# A subcubic graph squares to max degree at most 9, so ten colors always do.
# The triangular prism reaches six vertices that all pairwise conflict.
prism = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
print("prism squared is complete:", square(prism).m == 15)
print("chi(prism^2) =", chromatic_number(square(prism)))
