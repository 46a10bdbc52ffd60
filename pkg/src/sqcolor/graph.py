"""Simple undirected graphs on dense vertex indices.

Vertices are ``0..n-1``. A :class:`Graph` is immutable once built; the
degree cap of subcubic graphs is not enforced here, callers check it.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import DuplicateEdge, EmptySet, IndexOutOfRange, KMaxTooLarge, SelfLoop

INF = math.inf
K_MAX_LIMIT = 8


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as a bitmask."""
        out = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabeled ``0..k-1`` in the given vertex order.

        Returns the subgraph and the list mapping new index -> old vertex.
        """
        keep = list(vertices)
        index = {v: i for i, v in enumerate(keep)}
        sub_edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return build_graph(len(keep), sub_edges), keep


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and return the normalized graph."""
    if n < 0:
        raise IndexOutOfRange(f"negative vertex count {n}")
    edges: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise DuplicateEdge(f"edge {e} listed twice")
        edges.add(e)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, frozenset(edges), tuple(tuple(sorted(a)) for a in adj))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} out of range for n={g.n}")


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[float]:
    """Multi-source BFS; unreachable vertices get ``inf``."""
    dist: list[float] = [INF] * g.n
    queue = deque()
    for s in sources:
        _check_vertex(g, s)
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    _check_vertex(g, v)
    return bfs_distances(g, [u])[v]


def set_distance(g: Graph, a: Iterable[int], b: Iterable[int]) -> float:
    a, b = list(a), list(b)
    if not a or not b:
        raise EmptySet("set_distance needs two nonempty vertex sets")
    for v in b:
        _check_vertex(g, v)
    dist = bfs_distances(g, a)
    return min(dist[v] for v in b)


def square(g: Graph) -> Graph:
    """The square: same vertices, an edge between every pair at distance 1 or 2."""
    edges = set()
    for v in range(g.n):
        for u in g.adjacency[v]:
            if v < u:
                edges.add((v, u))
            for w in g.adjacency[u]:
                if v < w:
                    edges.add((v, w))
    return build_graph(g.n, edges)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d != INF for d in bfs_distances(g, [0]))


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``inf`` for forests (BFS from every vertex)."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def enumerate_cycles(g: Graph, k_max: int) -> dict[int, list[tuple[int, ...]]]:
    """All cycles of length 3..k_max as canonical vertex sequences.

    A cycle is listed once, starting at its lowest vertex, with the smaller of
    that vertex's two cycle neighbours second.
    """
    if k_max > K_MAX_LIMIT:
        raise KMaxTooLarge(f"k_max={k_max} exceeds {K_MAX_LIMIT}")
    cycles: dict[int, list[tuple[int, ...]]] = {k: [] for k in range(3, k_max + 1)}

    def extend(path: list[int], on_path: set[int]) -> None:
        start, last = path[0], path[-1]
        for w in g.adjacency[last]:
            if w == start and len(path) >= 3 and path[1] < last:
                cycles[len(path)].append(tuple(path))
            elif w > start and w not in on_path and len(path) < k_max:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    for s in range(g.n):
        extend([s], {s})
    for k in cycles:
        cycles[k].sort()
    return cycles


def girth_and_cycles(g: Graph, k_max: int) -> tuple[float, dict[int, list[tuple[int, ...]]]]:
    cycles = enumerate_cycles(g, k_max)
    return girth(g), cycles


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in sorted(g.edges):
        for w in g.adjacency[v]:
            if w > v and g.has_edge(u, w):
                out.append((u, v, w))
    return out


def articulation_points(g: Graph) -> set[int]:
    """Cut vertices by the DFS lowpoint method."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # iterative DFS: (vertex, parent, neighbour iterator)
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(g.adjacency[w])))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if parent != root and low[u] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return cut


def has_cycle_of_length(g: Graph, k: int) -> bool:
    return bool(enumerate_cycles(g, k)[k]) if k >= 3 else False
