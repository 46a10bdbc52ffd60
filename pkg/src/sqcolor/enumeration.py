"""Connected subcubic graphs up to isomorphism, for small vertex counts.

Graphs on ``n`` vertices are grown from those on ``n - 1``: every connected
graph has a vertex whose removal leaves it connected, so adding one vertex
joined to 1-3 vertices of degree at most 2 reaches all of them. Duplicates
are removed with a canonical form. The optional filters (no 4-/5-cycles,
planar) are closed under vertex deletion, so they prune every level.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .embedding import find_planar_embedding
from .errors import TooLarge
from .graph import Graph, build_graph, enumerate_cycles

ENUM_LIMIT = 10
FILTERS = ("noC4C5", "planar", "connected")


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts per cell until stable."""
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(sorted(where[u] for u in g.adjacency[v]))
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Isomorphism invariant that determines the graph up to isomorphism.

    Individualization-refinement: start from the degree partition, refine,
    branch on each vertex of the first non-singleton cell, and keep the
    smallest relabeled edge list over all discrete leaves.
    """
    best = None
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(g, cells)
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                for v in cell:
                    rest = [u for u in cell if u != v]
                    search(cells[:i] + [[v], rest] + cells[i + 1:])
                return
        label = {cell[0]: i for i, cell in enumerate(cells)}
        edges = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in g.edges))
        if best is None or edges < best:
            best = edges

    if g.n:
        search(start)
    return g.n, best or ()


def canonical_graph(g: Graph) -> Graph:
    n, edges = canonical_form(g)
    return build_graph(n, edges)


def _passes(g: Graph, filters: frozenset[str]) -> bool:
    if "noC4C5" in filters:
        cycles = enumerate_cycles(g, 5)
        if cycles[4] or cycles[5]:
            return False
    if "planar" in filters and find_planar_embedding(g) is None:
        return False
    return True


def _extensions(g: Graph) -> Iterator[Graph]:
    open_vertices = [v for v in range(g.n) if g.degree(v) < 3]
    for k in (1, 2, 3):
        for nbrs in combinations(open_vertices, k):
            yield build_graph(g.n + 1, list(g.edges) + [(v, g.n) for v in nbrs])


def enumerate_subcubic(n_max: int, filters: Iterable[str] = ()) -> Iterator[Graph]:
    """Connected graphs with max degree <= 3 on 1..n_max vertices.

    One canonical representative per isomorphism class, ordered by vertex
    count and then by canonical edge list.
    """
    filters = frozenset(filters)
    unknown = filters - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filters {sorted(unknown)}")
    if n_max > ENUM_LIMIT:
        raise TooLarge(f"n_max={n_max} exceeds {ENUM_LIMIT}")
    if n_max < 1:
        return
    level = {canonical_form(build_graph(1, [])): build_graph(1, [])}
    for n in range(1, n_max + 1):
        for key in sorted(level):
            yield level[key]
        if n == n_max:
            break
        nxt: dict = {}
        for key in sorted(level):
            for h in _extensions(level[key]):
                form = canonical_form(h)
                if form in nxt:
                    continue
                nxt[form] = build_graph(*form) if _passes(h, filters) else None
        level = {k: v for k, v in nxt.items() if v is not None}
