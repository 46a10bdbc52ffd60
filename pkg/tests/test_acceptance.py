"""The eight acceptance criteria, each printing one PASS/FAIL line.

Run with ``pytest -v tests/test_acceptance.py`` or directly as a script.
"""

from __future__ import annotations

import time
from itertools import product

import pytest

from sqcolor.choosability import greedy_order_certificate, is_f_choosable, naive_f_choosable
from sqcolor.configurations import catalog, check_strategy, derive_residual_bounds, get_configuration, verify_reducible
from sqcolor.discharging import apply_rules, audit, initial_charges, spacing_max_marks
from sqcolor.embedding import build_embedding, find_planar_embedding, rotation_choices, trace_faces
from sqcolor.enumeration import enumerate_subcubic
from sqcolor.errors import TheoremContradiction
from sqcolor.graph import build_graph, cycle_graph, square
from sqcolor.listcolor import chromatic_number

RESIDUALS = {
    "H": (5, 3, 2, 2, 3, 5, 4),
    "W1": (3, 3, 5, 5, 3, 3),
    "W2": (3, 3, 4, 4, 3, 3, 4),
    "Q1": (3, 3, 4, 4),
    "Q2": (3, 3, 4, 3, 3),
    "Q3": (3, 3, 4, 3, 2, 3),
    "TRI2V": (3,),
}
H_BRANCHES = ("case1", "case2.1", "case2.2", "case2.2/c5=beta", "case2.2/c5!=beta")


def emit(capsys, number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def criterion_1():
    t0 = time.perf_counter()
    wrong = {c.name: derive_residual_bounds(c) for c in catalog() if derive_residual_bounds(c) != RESIDUALS[c.name]}
    seconds = time.perf_counter() - t0
    return not wrong and seconds < 1, f"residual vectors, mismatches={wrong or 'none'}, {seconds:.3f}s (<1s)"


def criterion_2():
    bad, slow, times = [], [], {}
    for c in catalog():
        t0 = time.perf_counter()
        cert = verify_reducible(c)
        seconds = time.perf_counter() - t0
        times[c.name] = round(seconds, 2)
        if not cert.choosable or cert.result.witness is not None:
            bad.append(c.name)
        if seconds >= (3600 if c.name == "H" else 60):
            slow.append(c.name)
    ok = not bad and not slow
    return ok, f"reducibility, not choosable={bad or 'none'}, over budget={slow or 'none'}, seconds={times}"


def all_graphs(n):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def criterion_3():
    t0 = time.perf_counter()
    checked, disagree = 0, []
    for n in range(1, 5):
        for g in all_graphs(n):
            for f in product((1, 2), repeat=n):
                a = is_f_choosable(g, f).choosable
                b = naive_f_choosable(g, f, sum(f)).choosable
                checked += 1
                if a != b:
                    disagree.append((sorted(g.edges), f))
    seconds = time.perf_counter() - t0
    ok = not disagree and seconds < 600
    return ok, f"oracle agreement on {checked} (graph, f) pairs, disagreements={len(disagree)}, {seconds:.1f}s (<600s)"


def criterion_4():
    t0 = time.perf_counter()
    problems = []
    h_seen = {label: 0 for label in H_BRANCHES}
    for c in catalog():
        for mode in ("random", "adversarial"):
            r = check_strategy(c, mode, trials=100_000, seed=1)
            if not r.ok or r.failure_count:
                problems.append(f"{c.name}/{mode}: failures={r.failure_count} improper={r.improper} unsound={r.unsound}")
            if c.name == "H":
                for label in H_BRANCHES:
                    h_seen[label] += r.coverage.get(label, 0)
    missing = [label for label, count in h_seen.items() if count == 0]
    seconds = time.perf_counter() - t0
    ok = not problems and not missing and seconds < 600
    return ok, (f"strategy fidelity, problems={problems or 'none'}, unexercised H branches={missing or 'none'}, "
                f"H coverage={h_seen}, {seconds:.1f}s (<600s)")


def criterion_5():
    t0 = time.perf_counter()
    values = {length: spacing_max_marks(length) for length in range(7, 41)}
    seconds = time.perf_counter() - t0
    over = [length for length, v in values.items() if v > length // 4]
    spot = values[7] == 1 and values[8] == 2 and values[12] == 3
    ok = not over and spot and seconds < 60
    return ok, f"spacing bound on 7..40, violations={over or 'none'}, l=7,8,12 -> {values[7]},{values[8]},{values[12]}, {seconds:.2f}s (<60s)"


def every_embedding(g):
    """All rotation systems of ``g`` that satisfy Euler's formula."""
    target = 2 - g.n + g.m
    for rot in product(*rotation_choices(g)):
        if len(trace_faces(g, rot)) == target:
            yield build_embedding(g, rot)


def criterion_6():
    embeddings, bad = 0, []
    for g in enumerate_subcubic(8):
        for e in every_embedding(g):
            embeddings += 1
            led = initial_charges(e)
            out = apply_rules(e, led)
            if led.total() != -12 or out.total() != led.total():
                bad.append(sorted(g.edges))
    return not bad and embeddings > 0, f"charge identities on {embeddings} embeddings, violations={len(bad)}"


def criterion_7():
    t0 = time.perf_counter()
    graphs = list(enumerate_subcubic(8, ["noC4C5", "planar"]))
    too_many, contradictions, worst = [], [], 0
    for g in graphs:
        chi = chromatic_number(square(g))
        worst = max(worst, chi)
        if chi > 7:
            too_many.append(sorted(g.edges))
        try:
            r = audit(find_planar_embedding(g))
        except TheoremContradiction:
            contradictions.append(sorted(g.edges))
            continue
        if all(r.predicates.values()) and not r.negative_vertices and not r.negative_faces:
            contradictions.append(sorted(g.edges))
    seconds = time.perf_counter() - t0
    ok = not too_many and not contradictions and seconds < 7200
    return ok, (f"sweep over {len(graphs)} graphs, max chi(G^2)={worst}, chi>7: {len(too_many)}, "
                f"all-clear audits: {len(contradictions)}, {seconds:.1f}s (<7200s)")


def criterion_8():
    c7 = chromatic_number(square(cycle_graph(7)))
    c6 = chromatic_number(square(cycle_graph(6)))
    w1 = get_configuration("W1")
    order = greedy_order_certificate(w1.conflict, (3, 3, 5, 5, 3, 3))
    reducible = verify_reducible(w1).choosable
    ok = c7 == 4 and c6 == 3 and order is None and reducible
    return ok, f"chi(C7^2)={c7}, chi(C6^2)={c6}, greedy order for W1={order}, W1 choosable={reducible}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number, capsys):
    ok, detail = CRITERIA[number - 1]()
    emit(capsys, number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for i, crit in enumerate(CRITERIA, start=1):
        emit(None, i, *crit())
