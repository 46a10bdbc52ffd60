"""Complete f-choosability decisions for small conflict graphs.

``is_f_choosable`` is the production decision procedure, ``naive_f_choosable``
an independent brute-force oracle for tiny graphs, and
``greedy_order_certificate`` a cheap sufficient condition.

How the complete search works
-----------------------------
A list assignment is described, up to renaming colors, by the multiset of its
color *supports*: the support of color ``c`` is the vertex set whose lists
contain ``c``. Vertex ``v`` lies in exactly ``f(v)`` supports.

1. Connected supports suffice. If a bad assignment has a color whose support
   induces a disconnected subgraph of the conflict graph, give each component
   its own fresh color. List sizes are unchanged, and any coloring of the new
   assignment maps back to one of the old (the components are non-adjacent),
   so the new assignment is still bad.

2. Peeling. A vertex with ``f(v) > deg(v)`` can always be colored last, so the
   graph is f-choosable iff it is after deleting ``v``.

3. Forbidden supports (``reduce=True``). Let color ``c`` have support ``S`` and
   let ``I`` be a nonempty independent subset of ``S``. Color all of ``I`` with
   ``c`` and drop ``c`` from the lists of ``S & N(I)``. If ``G - I`` is
   f'-choosable with ``f' = f - 1`` on ``S & N(I)``, every assignment that
   contains the support ``S`` is colorable. Supports of a bad assignment are
   therefore never forbidden, and the enumeration only uses the rest. The
   sub-question is answered recursively (memoized) by the same procedure.

Multisets are enumerated vertex by vertex: each support is charged to its
first vertex in the processing order, and supports charged to one vertex are
taken in nondecreasing index order, so every multiset appears once. Each
complete multiset is decided by the backtracking list colorer.

``reduce=False`` keeps only step 1 and 2; tests cross-check both modes and the
naive oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

from .errors import SearchBudgetExceeded, TooLarge
from .graph import Graph
from .listcolor import solve_list_coloring, solve_masks

MAX_N = 8
MAX_TOTAL = 28
NAIVE_MAX_N = 4
NAIVE_MAX_POOL = 8
GREEDY_MAX_N = 10


@dataclass
class SearchStats:
    candidates: int = 0
    supports: int = 0
    forbidden: int = 0
    subproblems: int = 0
    symmetric_skips: int = 0


@dataclass(frozen=True)
class BadAssignmentWitness:
    lists: tuple[frozenset[int], ...]
    summary: str = ""


@dataclass
class ChoosabilityResult:
    choosable: bool
    f: tuple[int, ...]
    witness: BadAssignmentWitness | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    def __bool__(self) -> bool:
        return self.choosable


class _Bad(Exception):
    def __init__(self, avail: list[int]):
        self.avail = avail


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _connected(mask: int, nbr: Sequence[int]) -> bool:
    seen = frontier = mask & -mask
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = nbr[low.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def _is_independent(mask: int, nbr: Sequence[int]) -> bool:
    return all(not (nbr[u] & mask) for u in _bits(mask))


def _check_f(conflict: Graph, f: Sequence[int]) -> tuple[int, ...]:
    f = tuple(int(x) for x in f)
    if len(f) != conflict.n:
        raise ValueError(f"size vector has {len(f)} entries, graph has {conflict.n} vertices")
    if any(x < 1 for x in f):
        raise ValueError("every list size must be at least 1")
    return f


def automorphisms(conflict: Graph, f: Sequence[int]) -> list[tuple[int, ...]]:
    """All vertex permutations preserving adjacency and ``f`` (small n only)."""
    n = conflict.n
    nbr = conflict.masks
    out = []
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> None:
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or f[w] != f[v] or conflict.degree(w) != conflict.degree(v):
                continue
            if any(((nbr[v] >> u) & 1) != ((nbr[w] >> image[u]) & 1) for u in range(v)):
                continue
            image[v], used[w] = w, True
            extend(v + 1)
            image[v], used[w] = -1, False

    extend(0)
    return out


class _Search:
    def __init__(self, conflict: Graph, reduce: bool, budget: int | None, stats: SearchStats):
        self.nbr = conflict.masks
        self.n = conflict.n
        self.reduce = reduce
        self.budget = budget
        self.stats = stats
        self.memo: dict[tuple[int, tuple[int, ...]], bool] = {}

    def peel(self, vmask: int, f: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
        """Drop vertices with f(v) > deg(v); ``None`` when some f(v) <= 0."""
        f = list(f)
        changed = True
        while changed:
            changed = False
            for v in _bits(vmask):
                if f[v] <= 0:
                    return None
                if f[v] > (self.nbr[v] & vmask).bit_count():
                    vmask &= ~(1 << v)
                    f[v] = 0
                    changed = True
        for v in range(self.n):
            if not (vmask >> v) & 1:
                f[v] = 0
        return vmask, tuple(f)

    def choosable(self, vmask: int, f: tuple[int, ...]) -> bool:
        peeled = self.peel(vmask, f)
        if peeled is None:
            return False
        vmask, f = peeled
        if not vmask:
            return True
        key = (vmask, f)
        if key not in self.memo:
            self.stats.subproblems += 1
            try:
                self.enumerate(vmask, f)
                self.memo[key] = True
            except _Bad:
                self.memo[key] = False
        return self.memo[key]

    def forbidden(self, support: int, vmask: int, f: tuple[int, ...]) -> bool:
        sub = support
        while sub:
            if _is_independent(sub, self.nbr):
                reach = 0
                for u in _bits(sub):
                    reach |= self.nbr[u]
                nf = list(f)
                for u in _bits(support & reach & ~sub):
                    nf[u] -= 1
                for u in _bits(sub):
                    nf[u] = 0
                if self.choosable(vmask & ~sub, tuple(nf)):
                    return True
            sub = (sub - 1) & support
        return False

    def supports(self, vmask: int, f: tuple[int, ...]) -> tuple[list[int], list[list[int]]]:
        verts = list(_bits(vmask))
        order = sorted(verts, key=lambda v: (-(self.nbr[v] & vmask).bit_count(), v))
        led = []
        for i, v in enumerate(order):
            later = 0
            for u in order[i + 1:]:
                later |= 1 << u
            sets = []
            sub = later
            while True:
                s = sub | (1 << v)
                if _connected(s, self.nbr):
                    if self.reduce and self.forbidden(s, vmask, f):
                        self.stats.forbidden += 1
                    else:
                        sets.append(s)
                if not sub:
                    break
                sub = (sub - 1) & later
            sets.sort()
            led.append(sets)
        return order, led

    def enumerate(self, vmask: int, f: tuple[int, ...], autos: list[tuple[int, ...]] | None = None) -> None:
        """Raise ``_Bad`` with the first uncolorable multiset, else return."""
        order, led = self.supports(vmask, f)
        if autos is not None:
            self.stats.supports = sum(len(s) for s in led)
        n = len(order)
        need = list(f)
        avail = [0] * self.n
        chosen: list[int] = []
        stats, nbr, budget = self.stats, self.nbr, self.budget

        def leaf() -> None:
            stats.candidates += 1
            if budget is not None and stats.candidates > budget:
                raise SearchBudgetExceeded(f"candidate budget {budget} exhausted", stats)
            if autos and not _canonical(chosen, autos):
                stats.symmetric_skips += 1
                return
            if solve_masks(nbr, avail, vmask) is None:
                raise _Bad(list(avail))

        def pick(pos: int, k: int, start: int, open_mask: int) -> None:
            if k == 0:
                pos += 1
                while pos < n and need[order[pos]] == 0:
                    pos += 1
                if pos == n:
                    leaf()
                    return
                pick(pos, need[order[pos]], 0, open_mask)
                return
            j = len(chosen)
            cands = led[pos]
            for idx in range(start, len(cands)):
                s = cands[idx]
                if s & ~open_mask:
                    continue
                nxt = open_mask
                for u in _bits(s):
                    need[u] -= 1
                    avail[u] |= 1 << j
                    if not need[u]:
                        nxt &= ~(1 << u)
                chosen.append(s)
                pick(pos, k - 1, idx, nxt)
                chosen.pop()
                for u in _bits(s):
                    need[u] += 1
                    avail[u] &= ~(1 << j)

        first = order[0]
        pick(0, need[first], 0, vmask)


def _canonical(chosen: list[int], autos: list[tuple[int, ...]]) -> bool:
    here = sorted(chosen)
    for sigma in autos:
        image = []
        for s in chosen:
            t = 0
            for u in _bits(s):
                t |= 1 << sigma[u]
            image.append(t)
        if sorted(image) < here:
            return False
    return True


def is_f_choosable(
    conflict: Graph,
    f: Sequence[int],
    *,
    reduce: bool = True,
    use_automorphisms: bool = False,
    budget: int | None = None,
    max_n: int = MAX_N,
    max_total: int = MAX_TOTAL,
) -> ChoosabilityResult:
    """Decide whether every assignment with ``|L(v)| = f(v)`` is colorable.

    Returns a result whose ``witness`` holds a bad assignment when the answer
    is no; the witness is re-checked with the list colorer before it is
    returned. ``budget`` caps the number of candidate multisets examined.
    """
    f = _check_f(conflict, f)
    if conflict.n > max_n or sum(f) > max_total:
        raise TooLarge(f"n={conflict.n}, sum(f)={sum(f)} exceeds guardrail ({max_n}, {max_total})")
    stats = SearchStats()
    search = _Search(conflict, reduce, budget, stats)
    peeled = search.peel((1 << conflict.n) - 1, f)
    vmask, pf = peeled
    if not vmask:
        return ChoosabilityResult(True, f, None, stats)
    autos = None
    if use_automorphisms:
        autos = [a for a in automorphisms(conflict, f) if a != tuple(range(conflict.n))]
    try:
        search.enumerate(vmask, pf, autos if autos is not None else [])
    except _Bad as bad:
        lists = _witness_lists(conflict.n, vmask, f, bad.avail)
        if solve_list_coloring(conflict, lists) is not None:
            raise AssertionError("emitted witness is colorable")
        summary = f"candidates={stats.candidates}"
        return ChoosabilityResult(False, f, BadAssignmentWitness(lists, summary), stats)
    return ChoosabilityResult(True, f, None, stats)


def _witness_lists(n: int, vmask: int, f: tuple[int, ...], avail: list[int]) -> tuple[frozenset[int], ...]:
    lists = []
    fresh = max((m.bit_length() for m in avail), default=0) + 1
    for v in range(n):
        if (vmask >> v) & 1:
            lists.append(frozenset(j + 1 for j in _bits(avail[v])))
        else:
            # peeled vertex: any colors work, it never matters
            lists.append(frozenset(range(fresh, fresh + f[v])))
            fresh += f[v]
    return tuple(lists)


def _canonical_assignments(f: Sequence[int], pool: int):
    """Assignments from ``{1..pool}`` in first-occurrence normal form.

    Colors appear for the first time in increasing order, scanning vertices in
    index order and each list in ascending order.
    """
    n = len(f)
    lists: list[frozenset[int]] = []

    def rec(v: int, used: int):
        if v == n:
            yield tuple(lists)
            return
        for new in range(0, min(f[v], pool - used) + 1):
            old = f[v] - new
            if old > used:
                continue
            fresh = tuple(range(used + 1, used + new + 1))
            for keep in combinations(range(1, used + 1), old):
                lists.append(frozenset(keep + fresh))
                yield from rec(v + 1, used + new)
                lists.pop()

    yield from rec(0, 0)


def naive_f_choosable(conflict: Graph, f: Sequence[int], pool: int) -> ChoosabilityResult:
    """Brute force over every assignment drawn from ``{1..pool}`` up to renaming."""
    f = _check_f(conflict, f)
    if conflict.n > NAIVE_MAX_N or pool > NAIVE_MAX_POOL:
        raise TooLarge(f"naive oracle limited to n<={NAIVE_MAX_N}, pool<={NAIVE_MAX_POOL}")
    if pool > sum(f):
        raise ValueError("pool larger than sum(f) adds nothing")
    stats = SearchStats()
    for lists in _canonical_assignments(f, pool):
        stats.candidates += 1
        if solve_list_coloring(conflict, lists) is None:
            return ChoosabilityResult(False, f, BadAssignmentWitness(lists, f"candidates={stats.candidates}"), stats)
    return ChoosabilityResult(True, f, None, stats)


def _peelable(nbr: Sequence[int], remaining: int, slack: Sequence[int]) -> bool:
    """True if ``remaining`` can be ordered so each vertex has < slack earlier neighbours."""
    changed = True
    while remaining and changed:
        changed = False
        for v in _bits(remaining):
            if (nbr[v] & remaining).bit_count() < slack[v]:
                remaining &= ~(1 << v)
                changed = True
    return not remaining


def greedy_order_certificate(conflict: Graph, f: Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographically first order in which every vertex has fewer earlier
    conflict-neighbours than its list size, or ``None`` if no order works.

    Any such order colors greedily from arbitrary lists. ``None`` says nothing
    about choosability.
    """
    f = _check_f(conflict, f)
    n = conflict.n
    if n > GREEDY_MAX_N:
        raise TooLarge(f"n={n} exceeds {GREEDY_MAX_N}")
    nbr = conflict.masks
    full = (1 << n) - 1
    if not _peelable(nbr, full, f):
        return None
    order: list[int] = []
    placed = 0
    for _ in range(n):
        for v in range(n):
            if (placed >> v) & 1:
                continue
            if (nbr[v] & placed).bit_count() >= f[v]:
                continue
            now = placed | (1 << v)
            slack = [f[u] - (nbr[u] & now).bit_count() for u in range(n)]
            if _peelable(nbr, full & ~now, slack):
                order.append(v)
                placed = now
                break
    return tuple(order)


def brute_force_greedy_orders(conflict: Graph, f: Sequence[int]) -> list[tuple[int, ...]]:
    """Every valid greedy order, by trying all permutations (test oracle)."""
    nbr = conflict.masks
    out = []
    for perm in permutations(range(conflict.n)):
        placed = 0
        for v in perm:
            if (nbr[v] & placed).bit_count() >= f[v]:
                break
            placed |= 1 << v
        else:
            out.append(perm)
    return out
