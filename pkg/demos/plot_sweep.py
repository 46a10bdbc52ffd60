"""
A sweep over small graphs
=========================

Enumerate connected subcubic planar graphs without 4- and 5-cycles, then
record the chromatic number of each square and the audit outcome.
"""

from collections import Counter

from sqcolor import enumerate_subcubic, run_corpus

graphs = list(enumerate_subcubic(8, ["noC4C5", "planar"]))
print("graphs:", Counter(g.n for g in graphs))

report = run_corpus([(f"g{i}", g, None) for i, g in enumerate(graphs)], ("chi-square", "audit"))
chis = Counter(v for k, v in report.records if k.endswith(".chi_square"))
print("chi(G^2) histogram:", dict(sorted(chis.items())))
fails = Counter()
for k, v in report.records:
    if k.endswith("failed_predicates"):
        fails.update(v.split(","))
print("failing predicates across the sweep:", dict(sorted(fails.items())))
print("verdict:", report.get("verdict"))
