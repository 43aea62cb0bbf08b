"""Exact solvers for the perfect coalition number and cross-check quantities.

``prc_bruteforce`` is the oracle: it enumerates every set partition
(restricted growth strings) and validates each one.  ``prc_solve`` runs the
same search with sound pruning and must agree with the oracle wherever both
are defined; it is validated against it exhaustively at small orders.  Both
return a certificate (re-derived and re-checkable in pure Python) whenever
the value is positive.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .coalition import (
    Partition,
    PrcCertificate,
    is_perfect_coalition,
    validate_prc_partition,
)
from .domination import is_dominating
from .errors import PerfcoalError, TooLargeError
from .graphs import Graph

BRUTEFORCE_MAX_N = 11
SOLVE_MAX_N = 20
COALITION_MAX_N = 10


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    partitions_tested: int
    elapsed_s: float


@dataclass(frozen=True)
class SolveResult:
    prc: int
    certificate: Optional[PrcCertificate]
    stats: SearchStats


def _partition_from_rgs(n: int, choice) -> Partition:
    k = int(max(choice)) + 1
    blocks = [0] * k
    for v in range(n):
        blocks[int(choice[v])] |= 1 << v
    return Partition(tuple(blocks))


def _run_search(g: Graph, prune: bool) -> SolveResult:
    t0 = time.perf_counter()
    if g.n == 0:
        return SolveResult(0, None, SearchStats(0, 0, time.perf_counter() - t0))
    best_k, nodes, tested, choice = _kernels.prc_search(g.adj_array(), g.n, prune)
    elapsed = time.perf_counter() - t0
    stats = SearchStats(int(nodes), int(tested), elapsed)
    if best_k == 0:
        return SolveResult(0, None, stats)
    part = _partition_from_rgs(g.n, choice)
    cert = validate_prc_partition(g, part)
    if not isinstance(cert, PrcCertificate) or len(cert.partition.blocks) != best_k:
        raise PerfcoalError("search returned a partition its own validator rejects")
    return SolveResult(int(best_k), cert, stats)


def prc_bruteforce(g: Graph) -> SolveResult:
    """Oracle: validate every set partition; partitions_tested is Bell(n)."""
    if g.n > BRUTEFORCE_MAX_N:
        raise TooLargeError(f"brute force is guarded to n <= {BRUTEFORCE_MAX_N}, got {g.n}")
    return _run_search(g, prune=False)


def prc_solve(g: Graph) -> SolveResult:
    """Pruned exact search; equals prc_bruteforce wherever both accept."""
    if g.n > SOLVE_MAX_N:
        raise TooLargeError(f"solver is guarded to n <= {SOLVE_MAX_N}, got {g.n}")
    return _run_search(g, prune=True)


def coalition_number_bruteforce(g: Graph) -> int:
    """Exact ordinary coalition number C(G) by partition enumeration."""
    if g.n > COALITION_MAX_N:
        raise TooLargeError(f"C(G) enumeration is guarded to n <= {COALITION_MAX_N}, got {g.n}")
    if g.n == 0:
        return 0
    best_k, _ = _kernels.coalition_search(g.adj_array(), g.n)
    return int(best_k)


def verify_certificate(g: Graph, cert: PrcCertificate) -> bool:
    """Re-derive every role claim from scratch; False for any malformed input."""
    try:
        part = cert.partition
        if not part.is_partition_of(g):
            return False
        k = len(part.blocks)
        if len(cert.roles) != k:
            return False
        for i, role in enumerate(cert.roles):
            b = part.blocks[i]
            if role is None:
                if b.bit_count() != 1 or not is_dominating(g, b):
                    return False
            else:
                if not isinstance(role, int) or not 0 <= role < k or role == i:
                    return False
                if not is_perfect_coalition(g, b, part.blocks[role]):
                    return False
        return True
    except (PerfcoalError, TypeError, AttributeError):
        return False
