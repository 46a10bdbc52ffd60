"""
Reducible configurations
========================

Each catalog entry deletes a few vertices from a local subgraph. A deleted
vertex keeps a residual list after its colored neighbours in the square
have used their colors; the configuration is reducible when the square
restricted to the deleted vertices is choosable with those residual sizes.
"""

import time

from sqcolor import catalog, check_strategy, derive_residual_bounds, verify_reducible
from sqcolor.strategy import describe

for c in catalog():
    t0 = time.perf_counter()
    cert = verify_reducible(c)
    print(f"{c.name:6s} f={derive_residual_bounds(c)}  choosable={cert.choosable}  "
          f"candidates={cert.result.stats.candidates}  greedy={cert.greedy_order}  "
          f"({time.perf_counter() - t0:.2f}s)")

# W1 has no greedy order: one color must be chosen with care first.
w1 = [c for c in catalog() if c.name == "W1"][0]
print()
print(describe(w1.strategy))

# The H strategy branches several times; a random run shows how often each
# branch fires.
h = [c for c in catalog() if c.name == "H"][0]
report = check_strategy(h, "random", trials=5000, seed=1)
print()
print("H strategy failures:", report.failure_count)
for label, count in report.coverage.items():
    print(f"  {label:22s} {count}")
