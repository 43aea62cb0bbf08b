"""Executable theorem suites: each runs one verification sweep and reports.

These back both ``perfcoal verify --suite NAME`` and the acceptance tests.
Sweeps over "all labeled graphs on n vertices" iterate edge masks with the
bit order of ``_kernels.decode_edge_mask``; the jitted batch kernels do the
heavy lifting and Python re-checks the structural side (family membership,
certificates) per qualifying graph.

The ``delta-bound`` suite checks the partner-count bound itself.  The
advertised sharpness example for that bound (hub construction) is checked in
the acceptance gate, where it fails by design: its pair block is a
dominating set, which the coalition definition excludes.  See README.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources
from itertools import permutations
from typing import Callable

import numpy as np

from . import _kernels
from .coalition import Partition, PrcCertificate, partner_count, validate_prc_partition
from .domination import enumerate_perfect_dominating_sets
from .families import (
    TClass,
    classify_T1_T2,
    construct_known_prc_partition,
    cycle_graph,
    family_b_example,
    formula_prc_cycle,
    formula_prc_path,
    is_in_family_B,
    km_k2_graph,
    path_graph,
    t1_graph,
    t2_graph,
    tree_r_graph,
)
from .graphs import Graph, encode_graph6, mask_of, parse_graph6, structure_report
from .solver import prc_bruteforce, prc_solve

TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}
ORACLE_RANDOM_SEED = 90517
ORACLE_RANDOM_GRAPHS_PER_ORDER = 1000


@dataclass(frozen=True)
class CaseFailure:
    case: str
    expected: str
    got: str


@dataclass
class TheoremReport:
    suite: str
    cases: int = 0
    failures: list[CaseFailure] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, case: str, expected, got) -> None:
        self.cases += 1
        if expected != got:
            self.failures.append(CaseFailure(case, repr(expected), repr(got)))

    def format(self) -> str:
        head = (
            f"suite {self.suite}: {self.cases} cases, {len(self.failures)} failures "
            f"[{self.elapsed_s:.2f} s] {'PASS' if self.passed else 'FAIL'}"
        )
        lines = [head]
        for f in self.failures[:50]:
            lines.append(f"  FAIL {f.case}: expected {f.expected}, got {f.got}")
        if len(self.failures) > 50:
            lines.append(f"  ... and {len(self.failures) - 50} more")
        return "\n".join(lines)


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph for a batch-kernel edge mask (row-major upper-triangle bits)."""
    adj = [0] * n
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> e) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            e += 1
    m = sum(a.bit_count() for a in adj) // 2
    return Graph(n=n, adj=tuple(adj), edge_count=m)


def _timed(fn: Callable[[TheoremReport], None], name: str) -> TheoremReport:
    rep = TheoremReport(suite=name)
    t0 = time.perf_counter()
    fn(rep)
    rep.elapsed_s = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# paths / cycles closed forms
# ---------------------------------------------------------------------------

def suite_paths(max_n: int = 14) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        for n in range(1, max_n + 1):
            g = path_graph(n)
            rep.check(f"prc_solve(P_{n})", formula_prc_path(n), prc_solve(g).prc)
            if n <= 10:
                rep.check(f"prc_bruteforce(P_{n})", formula_prc_path(n), prc_bruteforce(g).prc)

    return _timed(run, "paths")


def suite_cycles(max_n: int = 13) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        for n in range(3, max_n + 1):
            g = cycle_graph(n)
            rep.check(f"prc_solve(C_{n})", formula_prc_cycle(n), prc_solve(g).prc)
            if n <= 10:
                rep.check(f"prc_bruteforce(C_{n})", formula_prc_cycle(n), prc_bruteforce(g).prc)

    return _timed(run, "cycles")


# ---------------------------------------------------------------------------
# partner-count bounds
# ---------------------------------------------------------------------------

def suite_delta_bound(max_n: int = 6) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        for n in range(1, max_n + 1):
            checked, bad = _kernels.batch_delta_bound(n)
            case = f"partner bound over {int(checked)} connected graphs, n={n}"
            rep.check(case, -1, int(bad))

    return _timed(run, "delta-bound")


def suite_disconnected_bound(max_n: int = 6) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        for n in range(2, max_n + 1):
            checked, bad = _kernels.batch_disconnected_delta_bound(n)
            case = f"partner bound over {int(checked)} disconnected graphs, n={n}"
            rep.check(case, -1, int(bad))
        for m in range(2, 6):
            g = km_k2_graph(m)
            pi = Partition.singletons(g.n)
            cert = validate_prc_partition(g, pi)
            rep.check(f"K_{m}+K_2 singleton partition valid", True, isinstance(cert, PrcCertificate))
            rep.check(f"K_{m}+K_2 partners of {{u_1}}", m, partner_count(g, pi, m))
            rep.check(f"K_{m}+K_2 max degree + 1", m, structure_report(g).max_degree + 1)

    return _timed(run, "disconnected-bound")


# ---------------------------------------------------------------------------
# perfect dominating set inventories
# ---------------------------------------------------------------------------

# inventories printed in the source tables, 1-based labels
_P8_SIZE3 = [{2, 5, 8}, {1, 4, 7}]
_P8_SIZE4 = [
    {1, 2, 5, 8}, {1, 4, 5, 8}, {1, 4, 7, 8},
    {2, 5, 6, 7}, {2, 3, 6, 7}, {2, 3, 4, 7},
]
_P13_SIZE5 = [
    {1, 4, 7, 10, 13}, {2, 3, 6, 9, 12}, {2, 5, 6, 9, 12},
    {2, 5, 8, 9, 12}, {2, 5, 8, 11, 12},
]
_P13_SIZE6_PRINTED = [
    {1, 2, 5, 6, 9, 12}, {2, 3, 6, 7, 10, 13}, {1, 2, 5, 8, 9, 12},
    {2, 3, 6, 9, 10, 13}, {1, 2, 5, 8, 11, 12}, {2, 3, 6, 9, 12, 13},
    {1, 4, 5, 8, 9, 12}, {2, 3, 6, 9, 12, 13}, {1, 4, 5, 8, 11, 12},
    {2, 3, 6, 9, 12, 13}, {1, 4, 7, 8, 11, 12}, {2, 5, 8, 9, 12, 13},
    {1, 2, 3, 6, 9, 12}, {2, 3, 4, 7, 10, 13}, {1, 4, 5, 6, 9, 12},
    {2, 5, 6, 7, 10, 13}, {1, 4, 7, 8, 9, 12}, {2, 5, 8, 9, 10, 13},
    {1, 4, 7, 10, 11, 12}, {2, 5, 8, 11, 12, 13},
]
# count established by the enumeration oracle; the printed list has 18
# distinct sets (one repeated three times) but the claimed total holds
P13_SIZE6_TRUE_COUNT = 20


def _masks_1based(sets: list[set[int]]) -> set[int]:
    return {mask_of(v - 1 for v in s) for s in sets}


def suite_pds_inventories() -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        p8 = path_graph(8)
        rep.check("P_8 size-3 inventory", _masks_1based(_P8_SIZE3),
                  set(enumerate_perfect_dominating_sets(p8, 3)))
        rep.check("P_8 size-4 inventory", _masks_1based(_P8_SIZE4),
                  set(enumerate_perfect_dominating_sets(p8, 4)))
        p13 = path_graph(13)
        rep.check("P_13 size-5 inventory", _masks_1based(_P13_SIZE5),
                  set(enumerate_perfect_dominating_sets(p13, 5)))
        size6 = set(enumerate_perfect_dominating_sets(p13, 6))
        printed = _masks_1based(_P13_SIZE6_PRINTED)
        rep.check("P_13 size-6 printed sets are distinct count 18", 18, len(printed))
        rep.check("P_13 size-6 printed subset of enumeration", True, printed <= size6)
        rep.check("P_13 size-6 count (claimed twenty)", P13_SIZE6_TRUE_COUNT, len(size6))

    return _timed(run, "pds-inventories")


# ---------------------------------------------------------------------------
# characterization sweeps
# ---------------------------------------------------------------------------

def suite_delta1(max_n: int = 7) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        for n in range(2, max_n + 1):
            cnt, masks, prcs = _kernels.batch_prc_over_masks(
                n, _kernels.FILTER_CONNECTED_MIN_DEGREE_ONE
            )
            mismatches = 0
            first = ""
            for i in range(int(cnt)):
                g = graph_from_edge_mask(n, int(masks[i]))
                is_k2 = n == 2 and g.edge_count == 1
                expected = is_k2 or is_in_family_B(g).in_B
                if (int(prcs[i]) == n) != expected:
                    mismatches += 1
                    if not first:
                        first = encode_graph6(g)
            rep.check(
                f"prc==n iff K_2-or-family-B over {int(cnt)} connected min-degree-1 graphs, n={n}",
                "0 mismatches",
                f"{mismatches} mismatches" + (f" (first {first})" if first else ""),
            )

    return _timed(run, "delta1")


def suite_triangle_free(max_n: int = 7) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        for n in range(4, max_n + 1):
            cnt, masks, prcs = _kernels.batch_prc_over_masks(n, _kernels.FILTER_TRIANGLE_FREE)
            mismatches = 0
            first = ""
            for i in range(int(cnt)):
                g = graph_from_edge_mask(n, int(masks[i]))
                member = classify_T1_T2(g).t_class is not TClass.NEITHER
                if (int(prcs[i]) == n) != member:
                    mismatches += 1
                    if not first:
                        first = encode_graph6(g)
            rep.check(
                f"prc==n iff T1/T2 over {int(cnt)} triangle-free graphs, n={n}",
                "0 mismatches",
                f"{mismatches} mismatches" + (f" (first {first})" if first else ""),
            )

    return _timed(run, "triangle-free")


def _load_tree_fixture() -> dict[int, list[Graph]]:
    text = (resources.files("perfcoal") / "data" / "trees_upto9.g6").read_text()
    out: dict[int, list[Graph]] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        g = parse_graph6(line)
        out.setdefault(g.n, []).append(g)
    return out


def _is_path_graph(g: Graph) -> bool:
    return all(g.degree(v) <= 2 for v in range(g.n))


def _isomorphic_small(g1: Graph, g2: Graph) -> bool:
    # brute force; fixture graphs have n <= 9 but this is only used at n=6
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    e1 = {frozenset(e) for e in g1.edges()}
    for perm in permutations(range(g2.n)):
        if e1 == {frozenset((perm[u], perm[v])) for u, v in g2.edges()}:
            return True
    return False


def suite_trees(max_n: int = 9) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        trees = _load_tree_fixture()
        tree_r = tree_r_graph()
        for n in range(1, max_n + 1):
            rep.check(f"free tree count n={n}", TREE_COUNTS[n], len(trees.get(n, [])))
            for g in trees.get(n, []):
                g6 = encode_graph6(g)
                srep = structure_report(g)
                if not (srep.connected and g.edge_count == n - 1):
                    rep.check(f"{g6} is a tree", True, False)
                    continue
                prc = prc_solve(g).prc
                want_full = n in (1, 2, 4) and _is_path_graph(g)
                rep.check(f"{g6}: prc == n", want_full, prc == n)
                if n > 2:
                    rep.check(f"{g6}: prc == n-1 impossible", False, prc == n - 1)
                want_nm2 = (n in (5, 6, 7) and _is_path_graph(g)) or (
                    n == 6 and _isomorphic_small(g, tree_r)
                )
                rep.check(f"{g6}: prc == n-2", want_nm2, prc == n - 2)

    return _timed(run, "trees")


# ---------------------------------------------------------------------------
# solver cross-checks
# ---------------------------------------------------------------------------

def suite_oracle(max_exhaustive_n: int = 6,
                 random_per_order: int = ORACLE_RANDOM_GRAPHS_PER_ORDER) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        for n in range(1, max_exhaustive_n + 1):
            bad = int(_kernels.batch_oracle_mismatch(n))
            rep.check(f"prc_solve == prc_bruteforce on all 2^{n*(n-1)//2} graphs, n={n}", -1, bad)
        rng = np.random.default_rng(ORACLE_RANDOM_SEED)
        for n in (8, 9):
            nedges = n * (n - 1) // 2
            adj = np.zeros(n, np.int64)
            mismatches = 0
            first = ""
            for _ in range(random_per_order):
                mask = int(rng.integers(0, 1 << nedges))
                _kernels.decode_edge_mask(mask, n, adj)
                k1 = int(_kernels.prc_search(adj, n, True)[0])
                k2 = int(_kernels.prc_search(adj, n, False)[0])
                if k1 != k2:
                    mismatches += 1
                    if not first:
                        first = encode_graph6(graph_from_edge_mask(n, mask))
            rep.check(
                f"prc_solve == prc_bruteforce on {random_per_order} random graphs, n={n}",
                "0 mismatches",
                f"{mismatches} mismatches" + (f" (first {first})" if first else ""),
            )

    return _timed(run, "oracle")


def suite_prc_vs_c(max_n: int = 6) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        for n in range(1, max_n + 1):
            bad = int(_kernels.batch_prc_exceeds_coalition(n))
            rep.check(f"prc <= C on all 2^{n*(n-1)//2} graphs, n={n}", -1, bad)

    return _timed(run, "prc-vs-c")


def suite_constructions(path_max_n: int = 20, cycle_max_n: int = 23) -> TheoremReport:
    def run(rep: TheoremReport) -> None:
        for n in range(1, path_max_n + 1):
            if n == 3:
                continue
            part = construct_known_prc_partition("path", n)
            cert = validate_prc_partition(path_graph(n), part)
            rep.check(f"P_{n} construction validates", True, isinstance(cert, PrcCertificate))
            rep.check(f"P_{n} construction order", formula_prc_path(n), part.order())
        for n in range(3, cycle_max_n + 1):
            part = construct_known_prc_partition("cycle", n)
            cert = validate_prc_partition(cycle_graph(n), part)
            rep.check(f"C_{n} construction validates", True, isinstance(cert, PrcCertificate))
            rep.check(f"C_{n} construction order", formula_prc_cycle(n), part.order())

    return _timed(run, "constructions")


def suite_families() -> TheoremReport:
    """Generated family members have full perfect coalition number."""

    def run(rep: TheoremReport) -> None:
        for r in range(2, 5):
            g = t1_graph(r)
            rep.check(f"t1:{r} classified", TClass.T1, classify_T1_T2(g).t_class)
            if g.n <= 10:
                rep.check(f"prc(t1:{r}) == n", g.n, prc_solve(g).prc)
        for r in range(2, 5):
            for s in range(r, 5):
                for m in range(0, min(r, s)):
                    g = t2_graph(r, s, m)
                    rep.check(f"t2:{r},{s},{m} classified", TClass.T2, classify_T1_T2(g).t_class)
                    if g.n <= 9:
                        rep.check(f"prc(t2:{r},{s},{m}) == n", g.n, prc_solve(g).prc)
        for a in range(1, 4):
            for b in range(1, 4):
                g = family_b_example(a, b)
                rep.check(f"family-B({a},{b}) recognized", True, is_in_family_B(g).in_B)
                rep.check(f"prc(family-B({a},{b})) == n", g.n, prc_solve(g).prc)

    return _timed(run, "families")


SUITES: dict[str, Callable[[], TheoremReport]] = {
    "paths": suite_paths,
    "cycles": suite_cycles,
    "delta-bound": suite_delta_bound,
    "disconnected-bound": suite_disconnected_bound,
    "pds-inventories": suite_pds_inventories,
    "delta1": suite_delta1,
    "triangle-free": suite_triangle_free,
    "trees": suite_trees,
    "oracle": suite_oracle,
    "prc-vs-c": suite_prc_vs_c,
    "constructions": suite_constructions,
    "families": suite_families,
}


def run_suite(name: str) -> TheoremReport:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
