import numpy as np
import pytest

from perfcoal import _kernels
from perfcoal.graphs import structure_report
from perfcoal.suites import (
    SUITES,
    TheoremReport,
    _isomorphic_small,
    _load_tree_fixture,
    graph_from_edge_mask,
    run_suite,
    suite_cycles,
    suite_delta1,
    suite_oracle,
    suite_paths,
    suite_triangle_free,
    TREE_COUNTS,
)
from perfcoal.families import path_graph, tree_r_graph


def test_report_accumulates():
    rep = TheoremReport(suite="demo")
    rep.check("a", 1, 1)
    rep.check("b", 1, 2)
    assert rep.cases == 2 and not rep.passed
    text = rep.format()
    assert "demo" in text and "FAIL b" in text


def test_run_suite_unknown():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_registry_names():
    assert {"paths", "cycles", "delta-bound", "disconnected-bound", "pds-inventories",
            "delta1", "triangle-free", "trees", "oracle", "prc-vs-c",
            "constructions", "families"} == set(SUITES)


def test_graph_from_edge_mask_matches_kernel():
    rng = np.random.default_rng(1)
    for n in (2, 4, 6):
        adj = np.zeros(n, np.int64)
        for _ in range(20):
            mask = int(rng.integers(0, 1 << (n * (n - 1) // 2)))
            _kernels.decode_edge_mask(mask, n, adj)
            assert list(graph_from_edge_mask(n, mask).adj) == [int(a) for a in adj]


def test_tree_fixture_is_a_complete_enumeration():
    # pairwise distinct canonical forms + the known free-tree counts imply
    # the fixture is exactly the set of free trees up to n = 9
    from conftest import tree_canonical_form

    trees = _load_tree_fixture()
    for n, want in TREE_COUNTS.items():
        forms = {tree_canonical_form(g) for g in trees.get(n, [])}
        assert len(forms) == want


def test_tree_fixture_counts_and_shape():
    trees = _load_tree_fixture()
    for n, want in TREE_COUNTS.items():
        got = trees.get(n, [])
        assert len(got) == want
        for g in got:
            rep = structure_report(g)
            assert rep.connected and g.edge_count == n - 1
    # pairwise non-isomorphic at the orders where R lives
    six = trees[6]
    for i in range(len(six)):
        for j in range(i + 1, len(six)):
            assert not _isomorphic_small(six[i], six[j])
    assert sum(_isomorphic_small(g, tree_r_graph()) for g in six) == 1


def test_isomorphism_helper():
    relabeled_p4 = graph_from_edge_mask(4, 0b110010)  # edges (0,2),(1,3),(2,3)
    assert _isomorphic_small(path_graph(4), relabeled_p4)
    star = graph_from_edge_mask(4, 0b000111)  # edges (0,1),(0,2),(0,3)
    assert not _isomorphic_small(path_graph(4), star)


def test_reduced_scope_suites_pass():
    assert suite_paths(max_n=8).passed
    assert suite_cycles(max_n=8).passed
    assert suite_delta1(max_n=5).passed
    assert suite_triangle_free(max_n=5).passed
    assert suite_oracle(max_exhaustive_n=4, random_per_order=25).passed
