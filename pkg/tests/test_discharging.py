from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from sqcolor.discharging import PREDICATES, apply_rules, audit, initial_charges, spacing_max_marks
from sqcolor.embedding import PlaneEmbedding, build_embedding, find_planar_embedding
from sqcolor.errors import HypothesisViolated, NotConnected, OutOfRange, TheoremContradiction
from sqcolor.graph import build_graph, complete_graph, cycle_graph, is_connected

from strategies import graphs

K4_ROT = [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)]


def f(x):
    return Fraction(x)


def test_c6_charges():
    led = initial_charges(find_planar_embedding(cycle_graph(6)))
    assert led.vertex_charge == [f(-2)] * 6
    assert led.face_charge == [f(0), f(0)]
    assert led.total() == -12


def test_k4_charges_unchanged_by_rules():
    e = build_embedding(complete_graph(4), K4_ROT)
    led = initial_charges(e)
    assert led.vertex_charge == [f(0)] * 4 and led.face_charge == [f(-3)] * 4
    out = apply_rules(e, led)
    assert out.vertex_charge == led.vertex_charge and out.face_charge == led.face_charge
    assert out.transfers == []


def test_c7_rules():
    e = find_planar_embedding(cycle_graph(7))
    led = initial_charges(e)
    assert led.face_charge == [f(1), f(1)]
    out = apply_rules(e, led)
    assert out.vertex_charge == [f(0)] * 7
    assert out.face_charge == [f(-6), f(-6)]
    assert out.total() == -12


def ladder_with_one_two_vertex():
    """A 7-cycle 0..6 whose vertices 1..6 get pendant partners joined in a path."""
    edges = [(i, (i + 1) % 7) for i in range(7)]
    edges += [(i, 6 + i) for i in range(1, 7)]           # partner of i is 6 + i (7..12)
    edges += [(6 + i, 7 + i) for i in range(1, 6)]
    return build_graph(13, edges)


def test_seven_face_with_one_two_vertex_ends_at_zero():
    g = ladder_with_one_two_vertex()
    e = find_planar_embedding(g)
    out = apply_rules(e, initial_charges(e))
    inner = [i for i, face in enumerate(e.faces) if {a for a, _ in face} == set(range(7))]
    assert len(inner) == 1
    assert out.face_charge[inner[0]] == 0


def test_r2_once_per_face_pair():
    # triangle 0-1-2 closed by the path 2-3-...-8-0: the 9-face shares two
    # edges with the triangle, the 8-face shares one; each pays exactly once
    g = build_graph(9, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 0)])
    e = find_planar_embedding(g)
    assert sorted(e.face_lengths()) == [3, 8, 9]
    out = apply_rules(e, initial_charges(e))
    tri = e.face_lengths().index(3)
    received = [t for t in out.transfers if t[1] == ("face", tri)]
    assert len(received) == 2 and len({t[0] for t in received}) == 2
    assert out.face_charge[tri] == -3 + 2
    # vertex 1 is a 2-vertex on the 9-face only, the others sit on both big faces
    got = {v: out.vertex_charge[v] for v in range(9) if g.degree(v) == 2}
    assert got[1] == -1 and all(got[v] == 0 for v in range(3, 9))


@given(graphs(min_n=1, max_n=9, max_degree=3))
def test_charge_identities_on_random_plane_graphs(g):
    if not is_connected(g):
        return
    e = find_planar_embedding(g)
    if e is None:
        return
    led = initial_charges(e)
    assert led.total() == -12
    assert apply_rules(e, led).total() == -12


# spacing --------------------------------------------------------------------

def spacing_oracle(length):
    """Maximum independent set of the mark clash graph, via networkx cliques."""
    def cyc(a, b):
        d = abs(a - b) % length
        return min(d, length - d)

    marks = [(s, k) for s in range(length) for k in (1, 2)]
    cells = {m: [(m[0] + i) % length for i in range(m[1])] for m in marks}
    need = {(1, 1): 4, (1, 2): 4, (2, 1): 4, (2, 2): 3}
    compat = nx.Graph()
    compat.add_nodes_from(marks)
    for i, a in enumerate(marks):
        for b in marks[i + 1:]:
            gap = min(cyc(x, y) for x in cells[a] for y in cells[b])
            if gap >= need[(a[1], b[1])]:
                compat.add_edge(a, b)
    _, weight = nx.max_weight_clique(compat, weight=None)
    return weight


@pytest.mark.parametrize("length", range(7, 17))
def test_spacing_matches_oracle(length):
    assert spacing_max_marks(length) == spacing_oracle(length)


def test_spacing_examples_and_bound():
    assert spacing_max_marks(7) == 1
    assert spacing_max_marks(8) == 2
    assert spacing_max_marks(12) == 3
    for length in range(7, 41):
        assert spacing_max_marks(length) <= length // 4


def test_spacing_range():
    with pytest.raises(OutOfRange):
        spacing_max_marks(6)
    with pytest.raises(OutOfRange):
        spacing_max_marks(41)


# audit ----------------------------------------------------------------------

def test_audit_c7():
    r = audit(find_planar_embedding(cycle_graph(7)))
    assert not r.predicates["P2"]
    assert r.negative_faces == [0, 1]
    assert r.verdict == "fail"
    assert set(r.predicates) == set(PREDICATES)


def test_audit_c6():
    r = audit(find_planar_embedding(cycle_graph(6)))
    assert not r.predicates["P2"] and not r.predicates["P4"]


def test_audit_k4_needs_hypotheses_relaxed():
    e = build_embedding(complete_graph(4), K4_ROT)
    with pytest.raises(HypothesisViolated) as info:
        audit(e)
    assert info.value.which == "no C4"
    r = audit(e, require_hypotheses=False)
    assert not r.predicates["P7"]
    assert r.final.face_charge == [f(-3)] * 4
    assert r.hypotheses["no C4"] is False


def test_audit_rejects_disconnected_and_c5():
    with pytest.raises(HypothesisViolated):
        audit(find_planar_embedding(cycle_graph(5)))
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(NotConnected):
        audit(PlaneEmbedding(g, ((1,), (0,), (3,), (2,)), ()))


def test_audit_predicates_on_known_graph():
    g = ladder_with_one_two_vertex()
    r = audit(find_planar_embedding(g), require_hypotheses=False)
    assert r.hypotheses["no C4"] is False            # the ladder rungs make 4-cycles
    assert r.predicates["P1"]                        # no 1-vertex
    assert not r.predicates["P2"]                    # 2-vertices 0 and 7 are at distance 2


def test_theorem_contradiction_is_loud(monkeypatch):
    # force an all-clear report to check that it is raised, not returned
    import sqcolor.discharging as d
    monkeypatch.setattr(d.AuditReport, "verdict", property(lambda self: "pass"))
    with pytest.raises(TheoremContradiction) as info:
        d.audit(find_planar_embedding(cycle_graph(7)))
    assert info.value.report.initial.total() == -12
    assert d.audit(find_planar_embedding(cycle_graph(7)), strict=False).verdict == "pass"
