import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perfcoal.domination import (
    domination_numbers,
    enumerate_perfect_dominating_sets,
    is_dominating,
    is_perfect_dominating,
)
from perfcoal.errors import BadParamsError
from perfcoal.families import complete_graph, cycle_graph, path_graph
from perfcoal.graphs import build_graph, mask_of

from conftest import (
    adjsets_of,
    graph_from_edge_mask,
    ref_pds_of_size,
    set_of_mask,
)


def m1(vertices_1based):
    # 1-based labels as used in the source tables
    return mask_of(v - 1 for v in vertices_1based)


def test_is_dominating_examples():
    assert is_dominating(complete_graph(4), mask_of([0]))
    assert not is_dominating(path_graph(3), mask_of([0]))
    # a coalition pair from the order-5 partition of P_7; its union dominates
    assert is_dominating(path_graph(7), m1([2, 6, 3]))
    # the two doubletons of that partition leave v_4 undominated
    assert not is_dominating(path_graph(7), m1([1, 2, 6, 7]))


def test_is_perfect_dominating_examples():
    p8 = path_graph(8)
    assert is_perfect_dominating(p8, m1([1, 2, 5, 8]))
    assert is_perfect_dominating(p8, p8.full_mask)  # V is vacuously perfect
    assert not is_perfect_dominating(cycle_graph(4), m1([1, 3]))


def test_empty_set_edge_cases():
    empty = build_graph(0, [])
    assert is_dominating(empty, 0)
    assert is_perfect_dominating(empty, 0)
    k1 = build_graph(1, [])
    assert not is_dominating(k1, 0)
    assert not is_perfect_dominating(k1, 0)


def test_domination_numbers_examples():
    assert domination_numbers(path_graph(8)).gamma_p == 3
    assert domination_numbers(cycle_graph(11)).gamma_p == 5
    for n in range(1, 7):
        assert domination_numbers(complete_graph(n)).gamma == 1
    with pytest.raises(BadParamsError):
        domination_numbers(build_graph(0, []))


def test_gamma_le_gamma_p_small_exhaustive():
    # every perfect dominating set is dominating, so this can never fail;
    # sweep n <= 6 exhaustively and sample n in {7, 8}
    for n in range(1, 7):
        for mask in range(1 << (n * (n - 1) // 2)):
            nums = domination_numbers(graph_from_edge_mask(n, mask))
            assert nums.gamma <= nums.gamma_p <= n
    rng = random.Random(4242)
    for n in (7, 8):
        for _ in range(40):
            g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
            nums = domination_numbers(g)
            assert nums.gamma <= nums.gamma_p <= n


def test_p8_inventories():
    p8 = path_graph(8)
    assert set(enumerate_perfect_dominating_sets(p8, 3)) == {m1([2, 5, 8]), m1([1, 4, 7])}
    want4 = {
        m1([1, 2, 5, 8]), m1([1, 4, 5, 8]), m1([1, 4, 7, 8]),
        m1([2, 5, 6, 7]), m1([2, 3, 6, 7]), m1([2, 3, 4, 7]),
    }
    assert set(enumerate_perfect_dominating_sets(p8, 4)) == want4


def test_p13_inventories():
    p13 = path_graph(13)
    want5 = {
        m1([1, 4, 7, 10, 13]), m1([2, 3, 6, 9, 12]), m1([2, 5, 6, 9, 12]),
        m1([2, 5, 8, 9, 12]), m1([2, 5, 8, 11, 12]),
    }
    assert set(enumerate_perfect_dominating_sets(p13, 5)) == want5
    # count established by the independent enumeration oracle
    assert len(enumerate_perfect_dominating_sets(p13, 6)) == 20


def test_enumeration_is_ascending_and_bounded():
    p8 = path_graph(8)
    for k in range(9):
        sets = enumerate_perfect_dominating_sets(p8, k)
        assert sets == sorted(sets)
        assert all(s.bit_count() == k for s in sets)
    with pytest.raises(BadParamsError):
        enumerate_perfect_dominating_sets(p8, 9)
    with pytest.raises(BadParamsError):
        enumerate_perfect_dominating_sets(p8, -1)


def test_size_zero_enumeration():
    assert enumerate_perfect_dominating_sets(build_graph(0, []), 0) == [0]
    assert enumerate_perfect_dominating_sets(build_graph(1, []), 0) == []


def test_enumeration_against_reference_filter():
    cases = [path_graph(n) for n in range(1, 11)]
    cases += [cycle_graph(n) for n in range(3, 11)]
    rng = random.Random(7)
    cases += [graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
              for n in (5, 6, 7, 8) for _ in range(8)]
    for g in cases:
        adj = adjsets_of(g)
        for k in range(g.n + 1):
            got = [set_of_mask(s) for s in enumerate_perfect_dominating_sets(g, k)]
            want = ref_pds_of_size(g.n, adj, k)
            assert len(got) == len(want) and set(got) == set(want)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 9), st.data())
def test_dominating_superset_monotone(n, data):
    mask = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    g = graph_from_edge_mask(n, mask)
    s = data.draw(st.integers(0, g.full_mask))
    extra = data.draw(st.integers(0, g.full_mask))
    if is_dominating(g, s):
        assert is_dominating(g, s | extra)
