"""Plane embeddings given by rotation systems.

A rotation gives each vertex the cyclic order of its neighbours. Faces are
traced on directed edges: after arriving at ``v`` along ``(u, v)`` the walk
continues to the neighbour that follows ``u`` in the rotation at ``v``.
Faces are kept as directed-edge walks, so bridges and cut vertices are fine:
a bridge is traversed in both directions, possibly by the same face.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from .errors import DegreeCapExceeded, InvalidRotation, NotConnected, NotPlanarEmbedding, TooLarge
from .graph import Graph, is_connected, triangles

PLANARITY_LIMIT = 16

Face = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PlaneEmbedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[Face, ...]

    def face_vertices(self, i: int) -> list[int]:
        """Vertices met along face ``i`` (tails of its edges, repeats kept)."""
        return [u for u, _ in self.faces[i]]

    def face_lengths(self) -> list[int]:
        return [len(face) for face in self.faces]

    @cached_property
    def face_of_dart(self) -> dict[tuple[int, int], int]:
        return {d: i for i, face in enumerate(self.faces) for d in face}


def trace_faces(g: Graph, rotation: Sequence[Sequence[int]]) -> list[Face]:
    succ = {}
    for v, rot in enumerate(rotation):
        k = len(rot)
        for i, u in enumerate(rot):
            succ[(v, u)] = rot[(i + 1) % k]
    seen = set()
    faces = []
    for u, v in sorted(g.edges):
        for dart in ((u, v), (v, u)):
            if dart in seen:
                continue
            walk = []
            a, b = dart
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append((a, b))
                a, b = b, succ[(b, a)]
            faces.append(tuple(walk))
    if g.m == 0:
        faces.append(())
    return faces


def _check_rotation(g: Graph, rotation: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if len(rotation) != g.n:
        raise InvalidRotation(f"rotation has {len(rotation)} entries for {g.n} vertices")
    out = []
    for v, rot in enumerate(rotation):
        rot = tuple(rot)
        if sorted(rot) != list(g.adjacency[v]):
            raise InvalidRotation(f"rotation at {v} is not a permutation of its neighbours")
        out.append(rot)
    return tuple(out)


def build_embedding(g: Graph, rotation: Sequence[Sequence[int]]) -> PlaneEmbedding:
    """Trace faces and require Euler's formula ``V - E + F = 2``."""
    rot = _check_rotation(g, rotation)
    if g.n == 0 or not is_connected(g):
        raise NotConnected("embeddings are only built for connected graphs")
    faces = trace_faces(g, rot)
    if g.n - g.m + len(faces) != 2:
        raise NotPlanarEmbedding(
            f"V - E + F = {g.n} - {g.m} + {len(faces)} = {g.n - g.m + len(faces)}, not 2"
        )
    return PlaneEmbedding(g, rot, tuple(faces))


def rotation_choices(g: Graph) -> list[list[tuple[int, ...]]]:
    """Distinct cyclic orders per vertex: two at degree 3, one otherwise."""
    out = []
    for v in range(g.n):
        nb = g.adjacency[v]
        if len(nb) == 3:
            a, b, c = nb
            out.append([(a, b, c), (a, c, b)])
        else:
            out.append([tuple(nb)])
    return out


def find_planar_embedding(g: Graph) -> PlaneEmbedding | None:
    """First planar rotation system in lexicographic order, or ``None``.

    Mirroring every rotation keeps the face count, so the first degree-3
    vertex is pinned to its first cyclic order.
    """
    if g.n > PLANARITY_LIMIT:
        raise TooLarge(f"n={g.n} exceeds {PLANARITY_LIMIT}")
    if g.max_degree > 3:
        raise DegreeCapExceeded(f"max degree {g.max_degree} > 3")
    if g.n == 0 or not is_connected(g):
        raise NotConnected("planarity search needs a connected graph")
    choices = rotation_choices(g)
    for v, c in enumerate(choices):
        if len(c) == 2:
            choices[v] = c[:1]
            break
    target = 2 - g.n + g.m
    for rot in product(*choices):
        if len(trace_faces(g, rot)) == target:
            return build_embedding(g, rot)
    return None


@dataclass(frozen=True)
class FaceStats:
    length: int
    two_vertices: frozenset[int]
    triangles: tuple[tuple[int, int, int], ...]


def face_stats(e: PlaneEmbedding) -> list[FaceStats]:
    """Length, 2-vertices, and edge-sharing 3-cycles of each face."""
    g = e.graph
    tris = triangles(g)
    out = []
    for face in e.faces:
        undirected = {(min(a, b), max(a, b)) for a, b in face}
        twos = frozenset(a for a, _ in face if g.degree(a) == 2)
        touching = tuple(
            t for t in tris
            if {(t[0], t[1]), (t[1], t[2]), (t[0], t[2])} & undirected
        )
        out.append(FaceStats(len(face), twos, touching))
    return out
