"""
Deciding f-choosability
=======================

``is_f_choosable`` searches list assignments described by their color
supports; ``naive_f_choosable`` tries every assignment from a small pool.
"""

from sqcolor import complete_graph, cycle_graph, is_f_choosable, naive_f_choosable
from sqcolor.choosability import greedy_order_certificate

# The triangle with 2-lists fails on three equal lists.
r = is_f_choosable(complete_graph(3), (2, 2, 2))
print("K3 with 2-lists:", r.choosable, "witness:", [sorted(x) for x in r.witness.lists])

# Even cycles are 2-choosable, odd ones are not.
for k in (4, 5, 6, 7):
    print(f"C{k} 2-choosable:", is_f_choosable(cycle_graph(k), (2,) * k).choosable)

# The brute-force oracle agrees on small cases.
print("naive C4:", naive_f_choosable(cycle_graph(4), (2, 2, 2, 2), 8).choosable)

# A greedy order is a cheap certificate: each vertex has fewer earlier
# neighbours than its list size. It exists for a path with sizes (1, 2, 2).
from sqcolor import path_graph
print("greedy order for P3 with (1,2,2):", greedy_order_certificate(path_graph(3), (1, 2, 2)))
print("greedy order for C4 with 2-lists:", greedy_order_certificate(cycle_graph(4), (2,) * 4))

# Search statistics show how much the reductions save.
slow = is_f_choosable(cycle_graph(6), (2,) * 6, reduce=False)
fast = is_f_choosable(cycle_graph(6), (2,) * 6)
print("C6 candidates without / with reductions:", slow.stats.candidates, fast.stats.candidates)
