import networkx as nx
import pytest
from hypothesis import given

from sqcolor.embedding import build_embedding, face_stats, find_planar_embedding, trace_faces
from sqcolor.errors import DegreeCapExceeded, InvalidRotation, NotConnected, NotPlanarEmbedding
from sqcolor.graph import build_graph, complete_graph, cycle_graph, is_connected, path_graph

from strategies import graphs

K4_ROT = [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)]


def petersen():
    return build_graph(10, [(i, (i + 1) % 5) for i in range(5)]
                       + [(i, i + 5) for i in range(5)]
                       + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])


def k33():
    return build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def test_cycle_has_two_faces():
    e = build_embedding(cycle_graph(6), [(5, 1)] + [(v - 1, v + 1) for v in range(1, 5)] + [(4, 0)])
    assert sorted(e.face_lengths()) == [6, 6]


def test_k4_planar_rotation():
    e = build_embedding(complete_graph(4), K4_ROT)
    assert e.face_lengths() == [3, 3, 3, 3]


def test_k4_bad_rotation():
    bad = [(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)]
    with pytest.raises(NotPlanarEmbedding):
        build_embedding(complete_graph(4), bad)


def test_rotation_must_permute_neighbours():
    with pytest.raises(InvalidRotation):
        build_embedding(path_graph(3), [(1,), (0,), (1,)])
    with pytest.raises(InvalidRotation):
        build_embedding(path_graph(3), [(1,), (0, 2)])


def test_disconnected_rejected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(NotConnected):
        build_embedding(g, [(1,), (0,), (3,), (2,)])
    with pytest.raises(NotConnected):
        find_planar_embedding(g)


def test_tree_single_face():
    e = find_planar_embedding(path_graph(4))
    assert e.face_lengths() == [6]


def test_non_planar_cubic_graphs():
    assert find_planar_embedding(petersen()) is None
    assert find_planar_embedding(k33()) is None


def test_degree_cap():
    with pytest.raises(DegreeCapExceeded):
        find_planar_embedding(complete_graph(5))


def test_every_dart_in_one_face():
    e = find_planar_embedding(complete_graph(4))
    darts = [d for face in e.faces for d in face]
    assert len(darts) == 2 * e.graph.m == len(set(darts))


def test_face_stats_triangle_with_pendant():
    # triangle 0-1-2 plus a path 2-3-4-5-6-7-0 closing a 7-face... keep it subcubic
    g = build_graph(8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0)])
    e = find_planar_embedding(g)
    stats = face_stats(e)
    lengths = sorted(s.length for s in stats)
    assert lengths == [3, 7, 8]
    big = [s for s in stats if s.length == 7][0]
    assert big.two_vertices == frozenset({3, 4, 5, 6, 7})
    assert big.triangles == ((0, 1, 2),)


@given(graphs(min_n=1, max_n=9, max_degree=3))
def test_planarity_matches_networkx(g):
    if not is_connected(g):
        return
    e = find_planar_embedding(g)
    planar, _ = nx.check_planarity(nx.Graph(list(g.edges)) if g.m else nx.empty_graph(1))
    assert (e is not None) == planar
    if e is not None:
        assert g.n - g.m + len(e.faces) == 2
        assert sum(e.face_lengths()) == 2 * g.m
        assert len(trace_faces(g, e.rotation)) == len(e.faces)
