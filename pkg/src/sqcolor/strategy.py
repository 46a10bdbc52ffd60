"""A small interpreter for hand-written list-coloring strategies.

A script is a tuple of steps over named vertices. Steps read the *current*
list of a vertex: its list minus the colors already used on its colored
conflict-neighbours. The one exception is :class:`IfMember`, which tests the
original list, because that is what the written arguments compare against.
Whenever a step may choose among several colors it takes the lowest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .errors import StrategyFailure
from .graph import Graph


@dataclass(frozen=True)
class PickCommon:
    """Color ``x`` and ``y`` with one color from both lists."""
    x: str
    y: str
    var: str | None = None


@dataclass(frozen=True)
class PickPreserving:
    """Color ``x`` with some ``a`` such that ``|L(y) - {a}| >= k``."""
    x: str
    y: str
    k: int
    var: str | None = None


@dataclass(frozen=True)
class ReserveOutside:
    """Bind ``var`` to a color of ``L(x) - L(y)`` without coloring anything."""
    var: str
    x: str
    y: str


@dataclass(frozen=True)
class PickAvoiding:
    x: str
    avoid: tuple[str, ...] = ()
    var: str | None = None


@dataclass(frozen=True)
class Assign:
    x: str
    var: str


@dataclass(frozen=True)
class Greedy:
    order: tuple[str, ...]


@dataclass(frozen=True)
class IfIntersects:
    x: str
    y: str
    then: tuple
    orelse: tuple
    labels: tuple[str, str] = ("", "")


@dataclass(frozen=True)
class IfMember:
    var: str
    x: str
    then: tuple
    orelse: tuple
    labels: tuple[str, str] = ("", "")


@dataclass(frozen=True)
class IfSizeAtLeast:
    x: str
    k: int
    then: tuple
    orelse: tuple
    labels: tuple[str, str] = ("", "")


@dataclass(frozen=True)
class IfChosenEq:
    x: str
    var: str
    then: tuple
    orelse: tuple
    labels: tuple[str, str] = ("", "")


Step = Union[PickCommon, PickPreserving, ReserveOutside, PickAvoiding, Assign, Greedy,
             IfIntersects, IfMember, IfSizeAtLeast, IfChosenEq]
Branch = (IfIntersects, IfMember, IfSizeAtLeast, IfChosenEq)


def branch_labels(script: Sequence[Step]) -> list[str]:
    """Every nonempty branch label in the script, in reading order."""
    out = []
    for step in script:
        if isinstance(step, Branch):
            for label, body in zip(step.labels, (step.then, step.orelse)):
                if label:
                    out.append(label)
                out.extend(branch_labels(body))
    return out


class _Run:
    def __init__(self, conflict: Graph, names: Sequence[str], lists: Sequence[frozenset[int]]):
        self.g = conflict
        self.index = {name: i for i, name in enumerate(names)}
        self.names = list(names)
        self.lists = lists
        self.color: dict[int, int] = {}
        self.vars: dict[str, int] = {}
        self.trace: list[str] = []

    def v(self, name: str) -> int:
        return self.index[name]

    def current(self, name: str) -> frozenset[int]:
        v = self.v(name)
        used = {self.color[u] for u in self.g.adjacency[v] if u in self.color}
        return self.lists[v] - used

    def fail(self, step, detail: str):
        raise StrategyFailure(repr(step), detail, dict(self.color))

    def paint(self, step, name: str, c: int) -> None:
        v = self.v(name)
        if v in self.color:
            self.fail(step, f"{name} is already colored")
        if c not in self.current(name):
            self.fail(step, f"color {c} not available at {name}")
        self.color[v] = c

    def bind(self, var: str | None, c: int) -> None:
        if var is not None:
            self.vars[var] = c

    def run(self, script: Sequence[Step]) -> None:
        for step in script:
            self.step(step)

    def branch(self, step, cond: bool) -> None:
        label = step.labels[0] if cond else step.labels[1]
        if label:
            self.trace.append(label)
        self.run(step.then if cond else step.orelse)

    def step(self, s: Step) -> None:
        if isinstance(s, PickCommon):
            if self.g.has_edge(self.v(s.x), self.v(s.y)):
                self.fail(s, f"{s.x} and {s.y} conflict")
            common = self.current(s.x) & self.current(s.y)
            if not common:
                self.fail(s, f"no common color for {s.x}, {s.y}")
            c = min(common)
            self.paint(s, s.x, c)
            self.paint(s, s.y, c)
            self.bind(s.var, c)
        elif isinstance(s, PickPreserving):
            target = self.current(s.y)
            ok = [c for c in sorted(self.current(s.x)) if len(target - {c}) >= s.k]
            if not ok:
                self.fail(s, f"no color at {s.x} leaves {s.k} at {s.y}")
            self.paint(s, s.x, ok[0])
            self.bind(s.var, ok[0])
        elif isinstance(s, ReserveOutside):
            outside = self.current(s.x) - self.current(s.y)
            if not outside:
                self.fail(s, f"L({s.x}) is contained in L({s.y})")
            self.vars[s.var] = min(outside)
        elif isinstance(s, PickAvoiding):
            banned = {self.vars[a] for a in s.avoid}
            ok = sorted(self.current(s.x) - banned)
            if not ok:
                self.fail(s, f"no color at {s.x} avoiding {s.avoid}")
            self.paint(s, s.x, ok[0])
            self.bind(s.var, ok[0])
        elif isinstance(s, Assign):
            self.paint(s, s.x, self.vars[s.var])
        elif isinstance(s, Greedy):
            for name in s.order:
                ok = sorted(self.current(name))
                if not ok:
                    self.fail(s, f"greedy stuck at {name}")
                self.paint(s, name, ok[0])
        elif isinstance(s, IfIntersects):
            self.branch(s, bool(self.current(s.x) & self.current(s.y)))
        elif isinstance(s, IfMember):
            self.branch(s, self.vars[s.var] in self.lists[self.v(s.x)])
        elif isinstance(s, IfSizeAtLeast):
            self.branch(s, len(self.current(s.x)) >= s.k)
        elif isinstance(s, IfChosenEq):
            self.branch(s, self.color.get(self.v(s.x)) == self.vars[s.var])
        else:
            raise TypeError(f"unknown step {s!r}")


def interpret(
    script: Sequence[Step],
    conflict: Graph,
    names: Sequence[str],
    lists: Sequence[frozenset[int]],
) -> tuple[dict[int, int], list[str]]:
    """Run ``script``; return the total coloring and the branch labels taken.

    Raises :class:`StrategyFailure` when a step has nothing to choose from or
    the script ends with uncolored vertices.
    """
    run = _Run(conflict, names, lists)
    run.run(script)
    missing = [names[v] for v in range(conflict.n) if v not in run.color]
    if missing:
        raise StrategyFailure("end", f"uncolored vertices {missing}", dict(run.color))
    return run.color, run.trace


def describe(script: Sequence[Step], indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for s in script:
        if isinstance(s, Branch):
            head = {k: v for k, v in vars(s).items() if k not in ("then", "orelse", "labels")}
            lines.append(f"{pad}{type(s).__name__}({', '.join(f'{k}={v!r}' for k, v in head.items())}):  # {s.labels[0]}")
            lines.append(describe(s.then, indent + 1))
            lines.append(f"{pad}else:  # {s.labels[1]}")
            lines.append(describe(s.orelse, indent + 1))
        else:
            lines.append(f"{pad}{s!r}")
    return "\n".join(x for x in lines if x)


def lists_by_name(names: Sequence[str], lists: Mapping[str, frozenset[int]]) -> list[frozenset[int]]:
    return [frozenset(lists[n]) for n in names]
