"""Reducible configurations: catalog, residual list bounds, verification.

Each configuration models a local subgraph ``H_full`` of a minimal
counterexample together with the set ``D`` of vertices that are deleted and
recolored. The conflict graph for recoloring is the square of ``H_full``
restricted to ``D``. That relies on two vertices at distance at least 3 in
``H_full`` staying at distance at least 3 in the host graph, which holds in a
subcubic graph without 4- and 5-cycles (for pairs at internal distance 4,
e.g. v2, v5 in W2, it additionally uses the absence of a 6-cycle through a
triangle). This is encoded as stated and not re-derived.

Vertex index tables (index: name)::

    TRI2V  0:u 1:v 2:w                      D = {w}
    H      0:v1 1:v2 ... 6:v7               D = all
    W1     0:v1 ... 5:v6                    D = all
    W2     0:v1 ... 6:v7                    D = all
    Q1     0:v1 1:v2 2:v3 3:w               D = all
    Q2     0:v1 1:v2 2:v3 3:v4 4:w          D = all
    Q3     0:v1 1:v2 2:v3 3:v4 4:v5 5:w     D = all
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Mapping, Sequence

from .choosability import ChoosabilityResult, greedy_order_certificate, is_f_choosable
from .errors import InvalidConfiguration, PreconditionError, ScriptMissing, StrategyFailure
from .graph import Graph, bfs_distances, build_graph, square
from .listcolor import check_proper, solve_list_coloring
from .strategy import (
    Assign, Greedy, IfChosenEq, IfIntersects, IfMember, IfSizeAtLeast, PickAvoiding,
    PickCommon, PickPreserving, ReserveOutside, Step, branch_labels, interpret,
)

LIST_SIZE = 7


@dataclass(frozen=True)
class Configuration:
    name: str
    graph: Graph
    names: tuple[str, ...]
    deleted: tuple[int, ...]
    caps: tuple[int, ...]
    expected_vector: tuple[int, ...]
    strategy: tuple[Step, ...] | None = None
    note: str = ""

    @cached_property
    def conflict(self) -> Graph:
        return square(self.graph).induced(self.deleted)[0]

    @property
    def deleted_names(self) -> tuple[str, ...]:
        return tuple(self.names[v] for v in self.deleted)


def make_configuration(
    name: str,
    names: Sequence[str],
    edges: Sequence[tuple[str, str]],
    expected_vector: Sequence[int],
    *,
    deleted: Sequence[str] | None = None,
    caps: Mapping[str, int] | None = None,
    strategy: Sequence[Step] | None = None,
    note: str = "",
) -> Configuration:
    """Build a configuration from named vertices; caps default to 3."""
    index = {v: i for i, v in enumerate(names)}
    g = build_graph(len(names), [(index[a], index[b]) for a, b in edges])
    caps = caps or {}
    cap_vec = tuple(caps.get(v, 3) for v in names)
    d = tuple(index[v] for v in (deleted if deleted is not None else names))
    return Configuration(name, g, tuple(names), d, cap_vec, tuple(expected_vector),
                         tuple(strategy) if strategy is not None else None, note)


def _v(k: int) -> list[str]:
    return [f"v{i}" for i in range(1, k + 1)]


_TRIANGLE = [("v1", "v2"), ("v2", "v3"), ("v1", "v3")]

_H_SCRIPT = (
    IfIntersects(
        "v3", "v7",
        then=(PickCommon("v3", "v7", "c"), Greedy(("v4", "v2", "v5", "v6", "v1"))),
        orelse=(
            PickPreserving("v2", "v4", 2, "alpha"),
            IfMember(
                "alpha", "v7",
                then=(
                    IfSizeAtLeast(
                        "v7", 4,
                        then=(Greedy(("v3", "v4", "v5", "v1", "v6", "v7")),),
                        orelse=(
                            ReserveOutside("beta", "v1", "v7"),
                            PickAvoiding("v3", ("beta",), "c3"),
                            Greedy(("v4", "v5")),
                            IfChosenEq(
                                "v5", "beta",
                                then=(Greedy(("v1", "v6", "v7")),),
                                orelse=(Assign("v1", "beta"), Greedy(("v6", "v7"))),
                                labels=("case2.2/c5=beta", "case2.2/c5!=beta"),
                            ),
                        ),
                        labels=("case2.2/as-2.1", "case2.2/|L'(v7)|=3"),
                    ),
                ),
                orelse=(Greedy(("v3", "v4", "v5", "v1", "v6", "v7")),),
                labels=("case2.2", "case2.1"),
            ),
        ),
        labels=("case1", "case2"),
    ),
)


def _one_pick(x: str, guard: str, var: str, rest: tuple[str, ...]) -> tuple[Step, ...]:
    return (
        IfSizeAtLeast(
            guard, 4,
            then=(PickAvoiding(x, (), var),),
            orelse=(PickPreserving(x, guard, 3, var),),
            labels=(f"|L({guard})|>=4", f"|L({guard})|=3"),
        ),
        Greedy(rest),
    )


def catalog() -> list[Configuration]:
    """The seven configurations, in the order TRI2V, H, W1, W2, Q1, Q2, Q3."""
    return [
        make_configuration(
            "TRI2V", ["u", "v", "w"], [("u", "v"), ("v", "w"), ("u", "w")], [3],
            deleted=["w"], caps={"w": 2}, strategy=(Greedy(("w",)),),
            note="triangle through a 2-vertex w",
        ),
        make_configuration(
            "H", _v(7),
            [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v6"),
             ("v6", "v1"), ("v7", "v1"), ("v7", "v6")],
            [5, 3, 2, 2, 3, 5, 4], strategy=_H_SCRIPT,
            note="6-cycle v1..v6 sharing edge v1v6 with triangle v1v6v7",
        ),
        make_configuration(
            "W1", _v(6), _TRIANGLE + [("v3", "v4"), ("v4", "v5"), ("v5", "v6"), ("v4", "v6")],
            [3, 3, 5, 5, 3, 3],
            strategy=_one_pick("v3", "v6", "alpha", ("v1", "v2", "v4", "v5", "v6")),
            note="two triangles joined by the edge v3v4",
        ),
        make_configuration(
            "W2", _v(7),
            _TRIANGLE + [("v3", "v7"), ("v7", "v4"), ("v4", "v5"), ("v5", "v6"), ("v4", "v6")],
            [3, 3, 4, 4, 3, 3, 4],
            strategy=_one_pick("v7", "v6", "beta", ("v1", "v2", "v3", "v4", "v5", "v6")),
            note="two triangles joined by the path v3 v7 v4",
        ),
        make_configuration(
            "Q1", ["v1", "v2", "v3", "w"], _TRIANGLE + [("v3", "w")], [3, 3, 4, 4],
            caps={"w": 2}, strategy=(Greedy(("v1", "v2", "v3", "w")),),
            note="2-vertex w adjacent to triangle vertex v3",
        ),
        make_configuration(
            "Q2", ["v1", "v2", "v3", "v4", "w"], _TRIANGLE + [("v3", "v4"), ("v4", "w")],
            [3, 3, 4, 3, 3], caps={"w": 2},
            strategy=(PickPreserving("v3", "v1", 3, "c"), Greedy(("w", "v4", "v2", "v1"))),
            note="2-vertex w at distance 2 from the triangle",
        ),
        make_configuration(
            "Q3", ["v1", "v2", "v3", "v4", "v5", "w"],
            _TRIANGLE + [("v3", "v4"), ("v4", "v5"), ("v5", "w")],
            [3, 3, 4, 3, 2, 3], caps={"w": 2},
            strategy=(PickPreserving("v3", "v1", 3, "alpha"), Greedy(("v5", "v4", "w", "v2", "v1"))),
            note="2-vertex w at distance 3 from the triangle",
        ),
    ]


def get_configuration(name: str) -> Configuration:
    for c in catalog():
        if c.name == name:
            return c
    raise KeyError(f"unknown configuration {name!r}")


def derive_residual_bounds(c: Configuration, list_size: int = LIST_SIZE) -> tuple[int, ...]:
    """Worst-case residual list size of each deleted vertex.

    From ``list_size`` subtract the colored square-neighbours outside ``D``:
    kept vertices of ``H_full`` within distance 2, three per missing edge
    slot at ``v`` (the outside neighbour and its two further neighbours), and
    one per missing slot at each neighbour of ``v``.
    """
    g = c.graph
    for v in range(g.n):
        if c.caps[v] < g.degree(v):
            raise InvalidConfiguration(f"{c.names[v]} has degree {g.degree(v)} above cap {c.caps[v]}")
    if len(set(c.deleted)) != len(c.deleted):
        raise InvalidConfiguration("deleted set lists a vertex twice")
    slack = [c.caps[v] - g.degree(v) for v in range(g.n)]
    deleted = set(c.deleted)
    bounds = []
    for v in c.deleted:
        dist = bfs_distances(g, [v])
        kept_near = sum(1 for x in range(g.n) if x not in deleted and dist[x] <= 2)
        external = 3 * slack[v] + sum(slack[u] for u in g.adjacency[v])
        b = max(0, list_size - kept_near - external)
        if b == 0:
            raise InvalidConfiguration(f"{c.names[v]} may have an empty residual list")
        bounds.append(b)
    return tuple(bounds)


@dataclass
class ReducibilityCertificate:
    name: str
    f: tuple[int, ...]
    result: ChoosabilityResult
    greedy_order: tuple[str, ...] | None
    seconds: float

    @property
    def choosable(self) -> bool:
        return self.result.choosable


def verify_reducible(c: Configuration, *, use_automorphisms: bool = False, reduce: bool = True,
                     budget: int | None = None) -> ReducibilityCertificate:
    f = derive_residual_bounds(c)
    t0 = time.perf_counter()
    result = is_f_choosable(c.conflict, f, reduce=reduce, use_automorphisms=use_automorphisms, budget=budget)
    seconds = time.perf_counter() - t0
    order = greedy_order_certificate(c.conflict, f)
    names = c.deleted_names
    return ReducibilityCertificate(
        c.name, f, result, tuple(names[i] for i in order) if order is not None else None, seconds
    )


@dataclass
class StrategyOutcome:
    coloring: dict[int, int]
    branches: list[str]


def _as_lists(c: Configuration, lists) -> list[frozenset[int]]:
    if isinstance(lists, Mapping):
        return [frozenset(lists[n]) for n in c.deleted_names]
    return [frozenset(x) for x in lists]


def run_strategy(c: Configuration, lists) -> StrategyOutcome:
    """Replay the configuration's written strategy on concrete residual lists.

    ``lists`` is indexed like ``c.deleted`` or keyed by vertex name. Raises
    :class:`StrategyFailure` if some step has no admissible color.
    """
    if c.strategy is None:
        raise ScriptMissing(f"{c.name} has no strategy script")
    lists = _as_lists(c, lists)
    f = derive_residual_bounds(c)
    if len(lists) != len(f):
        raise PreconditionError(f"expected {len(f)} lists, got {len(lists)}")
    for name, lst, b in zip(c.deleted_names, lists, f):
        if len(lst) < b:
            raise PreconditionError(f"|L({name})| = {len(lst)} is below the bound {b}")
    coloring, trace = interpret(c.strategy, c.conflict, c.deleted_names, lists)
    return StrategyOutcome(coloring, trace)


@dataclass
class StrategyReport:
    name: str
    mode: str
    trials: int = 0
    failure_count: int = 0
    failures: list[tuple[list[frozenset[int]], str]] = field(default_factory=list)
    coverage: dict[str, int] = field(default_factory=dict)
    improper: int = 0
    unsound: int = 0
    uncolorable: int = 0

    @property
    def ok(self) -> bool:
        return not self.failure_count and not self.improper and not self.unsound


def _random_lists(rng: random.Random, f: Sequence[int], pool: int) -> list[frozenset[int]]:
    colors = range(1, pool + 1)
    return [frozenset(rng.sample(colors, k)) for k in f]


def _adversarial_lists(f: Sequence[int], rng: random.Random, budget: int = 20000):
    n = len(f)
    top = max(f)
    yield [frozenset(range(1, k + 1)) for k in f]                      # nested
    yield [frozenset(range(top - k + 1, top + 1)) for k in f]          # nested from the top
    start, block = 1, []
    for k in f:                                                        # disjoint
        block.append(frozenset(range(start, start + k)))
        start += k
    yield block
    for v in range(n):                                                 # one list oversized
        yield [frozenset(range(1, k + 2 if u == v else k + 1)) for u, k in enumerate(f)]
        bigger = [k + 1 if u == v else k for u, k in enumerate(f)]
        for _ in range(64):
            yield _random_lists(rng, bigger, sum(bigger))
    shifts = 1
    while (shifts + 1) ** n <= budget:
        shifts += 1
    for starts in product(range(1, shifts + 1), repeat=n):             # sliding windows
        yield [frozenset(range(s, s + k)) for s, k in zip(starts, f)]
    pool = sum(f)
    for x in range(n):                                                 # aligned / anti-aligned pairs
        for y in range(n):
            if x == y:
                continue
            for _ in range(8):
                lists = _random_lists(rng, f, pool)
                base = rng.sample(range(1, pool + 1), max(f[x], f[y]))
                lists[x] = frozenset(base[:f[x]])
                lists[y] = frozenset(base[:f[y]])
                yield lists
                rest = [c for c in range(1, pool + 1) if c not in lists[x]]
                lists = list(lists)
                lists[y] = frozenset(rng.sample(rest, f[y]))
                yield lists


def check_strategy(c: Configuration, mode: str = "random", *, trials: int = 100_000, seed: int = 1,
                   keep: int = 20) -> StrategyReport:
    """Falsification harness for a configuration's strategy script.

    ``random`` draws lists of exactly the bound sizes from ``sum(f)`` colors;
    ``adversarial`` runs structured families (nested, disjoint, sliding
    windows, aligned and anti-aligned pairs, one oversized list). Every
    success is re-checked for properness and every failure against the
    exact solver. At most ``keep`` failing assignments are stored.
    """
    if c.strategy is None:
        raise ScriptMissing(f"{c.name} has no strategy script")
    if mode not in ("random", "adversarial"):
        raise ValueError(f"unknown mode {mode!r}")
    f = derive_residual_bounds(c)
    rng = random.Random(seed)
    report = StrategyReport(c.name, mode)
    report.coverage = {label: 0 for label in branch_labels(c.strategy)}
    pool = sum(f)
    if mode == "random":
        source = (_random_lists(rng, f, pool) for _ in range(trials))
    else:
        source = _adversarial_lists(f, rng)
    conflict = c.conflict
    for lists in source:
        report.trials += 1
        solvable = solve_list_coloring(conflict, lists) is not None
        if not solvable:
            report.uncolorable += 1
        try:
            outcome = run_strategy(c, lists)
        except StrategyFailure as exc:
            report.failure_count += 1
            if len(report.failures) < keep:
                report.failures.append((lists, str(exc)))
            continue
        for label in outcome.branches:
            report.coverage[label] = report.coverage.get(label, 0) + 1
        if not check_proper(conflict, outcome.coloring, lists):
            report.improper += 1
        if not solvable:
            report.unsound += 1
    return report
