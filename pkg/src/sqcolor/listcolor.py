"""Proper and list colorings of explicit conflict graphs.

Callers pass the conflict graph themselves (usually ``square(g)`` or a
restriction of it); nothing here squares implicitly. A list assignment is a
sequence of color sets indexed by vertex, a coloring is a ``dict`` from vertex
to color. Colors are small non-negative integers compared by equality.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import GreedyStuck, OrderMismatch, TooLarge
from .graph import Graph

Lists = Sequence[frozenset[int]]
Coloring = dict[int, int]

CHROMATIC_LIMIT = 30


def make_lists(lists: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    out = tuple(frozenset(x) for x in lists)
    for v, lst in enumerate(out):
        if not lst:
            raise ValueError(f"empty list at vertex {v}")
    return out


def check_proper(conflict: Graph, coloring: Mapping[int, int], lists: Lists | None = None) -> bool:
    for u, v in conflict.edges:
        if u in coloring and v in coloring and coloring[u] == coloring[v]:
            return False
    if lists is not None:
        return all(c in lists[v] for v, c in coloring.items())
    return True


def _pick(avail: list[int], open_mask: int) -> int:
    best, best_size = -1, 1 << 30
    m = open_mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        size = avail[v].bit_count()
        if size < best_size:
            best, best_size = v, size
            if size <= 1:
                break
        m ^= low
    return best


def solve_masks(nbr: Sequence[int], avail: list[int], open_mask: int | None = None) -> list[int] | None:
    """Backtracking list coloring on bitmask data.

    ``nbr[v]`` is the neighbourhood mask of ``v`` and ``avail[v]`` the mask of
    color indices still allowed at ``v``. Returns the chosen color index per
    vertex (``-1`` for vertices outside ``open_mask``), or ``None``.
    Most-constrained vertex first, lowest vertex on ties, lowest color first.
    """
    n = len(nbr)
    if open_mask is None:
        open_mask = (1 << n) - 1
    choice = [-1] * n

    def rec(avail: list[int], open_mask: int) -> bool:
        if not open_mask:
            return True
        v = _pick(avail, open_mask)
        colors = avail[v]
        rest = open_mask & ~(1 << v)
        touched = nbr[v] & rest
        while colors:
            bit = colors & -colors
            colors ^= bit
            nxt = avail[:]
            m = touched
            dead = False
            while m:
                low = m & -m
                u = low.bit_length() - 1
                nxt[u] &= ~bit
                if not nxt[u]:
                    dead = True
                    break
                m ^= low
            if dead:
                continue
            choice[v] = bit.bit_length() - 1
            if rec(nxt, rest):
                return True
        choice[v] = -1
        return False

    return choice if rec(list(avail), open_mask) else None


def _encode(lists: Lists) -> tuple[list[int], list[int]]:
    palette = sorted(set().union(*lists)) if lists else []
    index = {c: i for i, c in enumerate(palette)}
    masks = []
    for lst in lists:
        m = 0
        for c in lst:
            m |= 1 << index[c]
        masks.append(m)
    return palette, masks


def solve_list_coloring(conflict: Graph, lists: Lists) -> Coloring | None:
    """A proper coloring drawn from ``lists``, or ``None`` if none exists."""
    if len(lists) != conflict.n:
        raise ValueError("one list per vertex required")
    palette, masks = _encode(lists)
    choice = solve_masks(conflict.masks, masks)
    if choice is None:
        return None
    return {v: palette[i] for v, i in enumerate(choice)}


def _max_clique(g: Graph) -> int:
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            grow(size + 1, cand & g.masks[v])
            cand ^= low
            if size + cand.bit_count() <= best:
                return

    grow(0, (1 << g.n) - 1)
    return best


def chromatic_number(conflict: Graph) -> int:
    """Exact chromatic number by increasing k from the clique bound."""
    if conflict.n > CHROMATIC_LIMIT:
        raise TooLarge(f"n={conflict.n} exceeds {CHROMATIC_LIMIT}")
    if conflict.n == 0:
        return 0
    k = max(1, _max_clique(conflict))
    while True:
        palette = frozenset(range(1, k + 1))
        if solve_list_coloring(conflict, [palette] * conflict.n) is not None:
            return k
        k += 1


def greedy_extend(conflict: Graph, partial: Mapping[int, int], order: Sequence[int], lists: Lists) -> Coloring:
    """Color ``order`` one vertex at a time with the lowest free list color.

    Raises :class:`GreedyStuck` at the first vertex with no free color.
    """
    uncolored = set(range(conflict.n)) - set(partial)
    if len(order) != len(set(order)) or set(order) != uncolored:
        raise OrderMismatch("order must list each uncolored vertex exactly once")
    coloring = dict(partial)
    for v in order:
        used = {coloring[u] for u in conflict.adjacency[v] if u in coloring}
        free = sorted(lists[v] - used)
        if not free:
            raise GreedyStuck(v, coloring)
        coloring[v] = free[0]
    return coloring
