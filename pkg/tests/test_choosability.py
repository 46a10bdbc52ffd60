import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from sqcolor.choosability import (
    automorphisms, brute_force_greedy_orders, greedy_order_certificate, is_f_choosable, naive_f_choosable,
)
from sqcolor.configurations import catalog, derive_residual_bounds, get_configuration
from sqcolor.errors import SearchBudgetExceeded, TooLarge
from sqcolor.graph import build_graph, complete_graph, cycle_graph, path_graph
from sqcolor.listcolor import solve_list_coloring

from strategies import graphs

EDGE = path_graph(2)
K3 = complete_graph(3)


def test_examples():
    r = is_f_choosable(K3, (2, 2, 2))
    assert not r.choosable
    assert r.witness.lists == (frozenset({1, 2}),) * 3
    assert is_f_choosable(EDGE, (1, 2)).choosable
    assert is_f_choosable(cycle_graph(4), (2, 2, 2, 2)).choosable
    assert is_f_choosable(K3, (3, 3, 3)).choosable


def test_naive_examples():
    assert naive_f_choosable(build_graph(1, []), (1,), 1).choosable
    r = naive_f_choosable(EDGE, (1, 1), 2)
    assert not r.choosable and r.witness.lists == (frozenset({1}), frozenset({1}))
    r = naive_f_choosable(K3, (2, 2, 2), 4)
    assert not r.choosable
    assert len(set(r.witness.lists)) == 1
    assert naive_f_choosable(cycle_graph(4), (2, 2, 2, 2), 8).choosable


def test_guards():
    with pytest.raises(TooLarge):
        is_f_choosable(cycle_graph(9), (3,) * 9)
    with pytest.raises(TooLarge):
        is_f_choosable(complete_graph(5), (6,) * 5)
    with pytest.raises(TooLarge):
        naive_f_choosable(cycle_graph(5), (2,) * 5, 4)
    with pytest.raises(TooLarge):
        naive_f_choosable(cycle_graph(4), (3,) * 4, 9)
    with pytest.raises(TooLarge):
        greedy_order_certificate(path_graph(11), (2,) * 11)
    with pytest.raises(ValueError):
        is_f_choosable(K3, (2, 2))
    with pytest.raises(ValueError):
        is_f_choosable(K3, (0, 2, 2))


def test_budget():
    # theta(2,2,4) is 2-choosable and theta(1,3,3) is not
    theta = build_graph(7, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 6), (6, 1)])
    theta133 = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    with pytest.raises(SearchBudgetExceeded) as info:
        is_f_choosable(complete_graph(4), (3, 3, 3, 3), budget=0, reduce=False)
    assert info.value.stats.candidates >= 1
    assert is_f_choosable(theta, (2,) * 7, reduce=False).choosable
    assert is_f_choosable(theta, (2,) * 7).choosable
    assert not is_f_choosable(theta133, (2,) * 6).choosable


def all_graphs(n):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_agreement_small_exhaustive(n):
    for g in all_graphs(n):
        for f in product((1, 2, 3), repeat=n):
            pool = min(sum(f), 8)
            a = is_f_choosable(g, f).choosable
            b = is_f_choosable(g, f, reduce=False).choosable
            c = naive_f_choosable(g, f, pool).choosable
            assert a == b == c, (g, f)


@given(graphs(max_n=7), st.data())
def test_reduce_modes_agree(g, data):
    f = tuple(data.draw(st.integers(1, 3)) for _ in range(g.n))
    a = is_f_choosable(g, f)
    b = is_f_choosable(g, f, reduce=False)
    assert a.choosable == b.choosable
    for r in (a, b):
        if r.witness is not None:
            assert tuple(len(x) for x in r.witness.lists) == f
            assert solve_list_coloring(g, r.witness.lists) is None


@given(graphs(max_n=7), st.data())
def test_automorphism_flag_stable(g, data):
    f = tuple(data.draw(st.integers(1, 3)) for _ in range(g.n))
    assert is_f_choosable(g, f).choosable == is_f_choosable(g, f, use_automorphisms=True).choosable


def test_automorphisms_of_cycle():
    assert len(automorphisms(cycle_graph(5), (2,) * 5)) == 10
    assert len(automorphisms(cycle_graph(5), (3, 2, 2, 2, 2))) == 2


@given(graphs(max_n=7), st.data())
def test_greedy_certificate_matches_brute_force(g, data):
    f = tuple(data.draw(st.integers(1, 4)) for _ in range(g.n))
    orders = brute_force_greedy_orders(g, f)
    cert = greedy_order_certificate(g, f)
    if orders:
        assert cert == min(orders)
        assert is_f_choosable(g, f).choosable
    else:
        assert cert is None


def test_greedy_examples():
    q1 = get_configuration("Q1")
    assert greedy_order_certificate(q1.conflict, (3, 3, 4, 4)) == (0, 1, 2, 3)
    w1 = get_configuration("W1")
    assert greedy_order_certificate(w1.conflict, (3, 3, 5, 5, 3, 3)) is None
    assert brute_force_greedy_orders(w1.conflict, (3, 3, 5, 5, 3, 3)) == []
    assert greedy_order_certificate(build_graph(1, []), (1,)) == (0,)


@pytest.mark.parametrize("c", catalog(), ids=lambda c: c.name)
def test_monotone_on_catalog(c):
    f = derive_residual_bounds(c)
    for v in range(len(f)):
        bigger = tuple(x + 1 if i == v else x for i, x in enumerate(f))
        if sum(bigger) <= 28:
            assert is_f_choosable(c.conflict, bigger).choosable


def test_decreasing_one_entry_of_w1_breaks_or_holds_consistently():
    # cross-check the two search modes on harder instances near the catalog
    w1 = get_configuration("W1")
    f = derive_residual_bounds(w1)
    rng = random.Random(3)
    for _ in range(4):
        v = rng.randrange(len(f))
        smaller = tuple(x - 1 if i == v and x > 1 else x for i, x in enumerate(f))
        a = is_f_choosable(w1.conflict, smaller)
        if a.witness is not None:
            assert solve_list_coloring(w1.conflict, a.witness.lists) is None
