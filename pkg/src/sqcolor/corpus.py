"""Corpus-level experiments and the line-oriented run report."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .discharging import audit
from .embedding import PlaneEmbedding, find_planar_embedding
from .errors import HypothesisViolated, TheoremContradiction
from .graph import Graph, is_connected, square
from .listcolor import chromatic_number, solve_list_coloring

TASKS = ("chi-square", "audit", "sample-lists")
WORKERS_ENV = "SQCOLOR_WORKERS"
LIST_SIZE = 7
POOL = 14


@dataclass
class RunReport:
    """``KEY=VALUE`` records plus an exit code (0 pass, 1 fail, 2 input error)."""

    records: list[tuple[str, str]] = field(default_factory=list)
    failed: bool = False

    def add(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        self.records.append((key, str(value)))

    def extend(self, other: "RunReport") -> None:
        self.records.extend(other.records)
        self.failed = self.failed or other.failed

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def render(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.records)

    def get(self, key: str) -> str | None:
        for k, v in self.records:
            if k == key:
                return v
        return None


def parse_report(text: str) -> list[tuple[str, str]]:
    out = []
    for line in text.splitlines():
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"not a KEY=VALUE record: {line!r}")
        out.append((key, value))
    return out


def sample_lists(conflict: Graph, trials: int, seed: int, size: int = LIST_SIZE, pool: int = POOL) -> int:
    """Number of random ``size``-lists from ``pool`` colors that colored."""
    rng = random.Random(seed)
    ok = 0
    colors = range(1, pool + 1)
    for _ in range(trials):
        lists = [frozenset(rng.sample(colors, size)) for _ in range(conflict.n)]
        if solve_list_coloring(conflict, lists) is not None:
            ok += 1
    return ok


def _one(args) -> RunReport:
    index, name, g, embedding, tasks, trials, seed = args
    rep = RunReport()
    p = f"g{index}"
    rep.add(f"{p}.name", name)
    rep.add(f"{p}.n", g.n)
    rep.add(f"{p}.m", g.m)
    if "chi-square" in tasks:
        chi = chromatic_number(square(g))
        rep.add(f"{p}.chi_square", chi)
        if chi > LIST_SIZE:
            rep.failed = True
    if "audit" in tasks:
        if embedding is None and is_connected(g) and g.max_degree <= 3 and g.n <= 16:
            embedding = find_planar_embedding(g)
        if embedding is None:
            rep.add(f"{p}.audit", "skipped(no embedding)")
        else:
            try:
                r = audit(embedding, strict=True)
            except HypothesisViolated as exc:
                rep.add(f"{p}.audit", f"skipped(hypothesis {exc.which})")
            except TheoremContradiction as exc:
                rep.add(f"{p}.audit", "ANOMALY(all checks passed)")
                rep.failed = True
                r = exc.report
            else:
                rep.add(f"{p}.audit", r.verdict)
                failing = [k for k, ok in r.predicates.items() if not ok]
                rep.add(f"{p}.audit.failed_predicates", ",".join(failing) or "none")
                rep.add(f"{p}.charges.initial_total", r.initial.total())
                rep.add(f"{p}.charges.final_total", r.final.total())
                rep.add(f"{p}.charges.negative_vertices", len(r.negative_vertices))
                rep.add(f"{p}.charges.negative_faces", len(r.negative_faces))
                consistent = bool(failing) or bool(r.negative_vertices or r.negative_faces)
                rep.add(f"{p}.theorem_consistent", consistent)
    if "sample-lists" in tasks:
        ok = sample_lists(square(g), trials, seed * 1_000_003 + index)
        rep.add(f"{p}.sample_lists", f"{ok}/{trials}")
        if ok != trials:
            rep.failed = True
    return rep


def workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run_corpus(
    graphs: Iterable[tuple[str, Graph, PlaneEmbedding | None]],
    tasks: Sequence[str] = ("chi-square",),
    *,
    trials: int = 1000,
    seed: int = 1,
    workers: int | None = None,
) -> RunReport:
    """Run the requested tasks on every graph; records come out in corpus order."""
    bad = set(tasks) - set(TASKS)
    if bad:
        raise ValueError(f"unknown tasks {sorted(bad)}")
    jobs = [(i, name, g, emb, tuple(tasks), trials, seed) for i, (name, g, emb) in enumerate(graphs)]
    workers = workers or workers_from_env()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_one, jobs))
    else:
        parts = [_one(job) for job in jobs]
    report = RunReport()
    report.add("graphs", len(jobs))
    report.add("tasks", ",".join(tasks))
    for part in parts:
        report.extend(part)
    report.add("verdict", "fail" if report.failed else "pass")
    return report
