"""Domination and perfect-domination predicates, numbers, and enumeration.

A set S dominates when every vertex is in S or adjacent to a member of S;
it perfectly dominates when every vertex *outside* S has exactly one
neighbor in S (so V itself is vacuously perfect dominating).  The empty set
dominates / perfectly dominates only the empty graph.

All searches here are exact and exponential; they are meant for desk-scale
graphs (the solvers guard their own sizes, these functions trust the caller).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParamsError
from .graphs import Graph, check_vertex_set


def is_dominating(g: Graph, s: int) -> bool:
    """True iff every vertex is in ``s`` or has a neighbor in ``s``."""
    check_vertex_set(g, s)
    cover = s
    m = s
    while m:
        low = m & -m
        cover |= g.adj[low.bit_length() - 1]
        m ^= low
    return cover == g.full_mask


def is_perfect_dominating(g: Graph, s: int) -> bool:
    """True iff each vertex outside ``s`` has exactly one neighbor in ``s``."""
    check_vertex_set(g, s)
    outside = g.full_mask & ~s
    while outside:
        low = outside & -outside
        v = low.bit_length() - 1
        outside ^= low
        if (g.adj[v] & s).bit_count() != 1:
            return False
    return True


@dataclass(frozen=True)
class DominationNumbers:
    gamma: int
    gamma_p: int


def _first_size_with(g: Graph, predicate) -> int:
    # smallest k admitting a set that satisfies predicate; V always works for
    # both domination variants, so this terminates at k <= n
    for k in range(1, g.n + 1):
        for s in _masks_of_size(g.n, k):
            if predicate(g, s):
                return k
    raise AssertionError("V itself should have satisfied the predicate")


def _masks_of_size(n: int, k: int):
    # all k-subsets of 0..n-1 as masks, ascending mask value (Gosper's hack)
    if k == 0:
        yield 0
        return
    if k > n:
        return
    m = (1 << k) - 1
    limit = 1 << n
    while m < limit:
        yield m
        lo = m & -m
        lz = m + lo
        m = lz | (((m ^ lz) // lo) >> 2)


def domination_numbers(g: Graph) -> DominationNumbers:
    """Exact gamma and gamma_p by increasing-size exhaustive search."""
    if g.n < 1:
        raise BadParamsError("domination numbers need at least one vertex")
    return DominationNumbers(
        gamma=_first_size_with(g, is_dominating),
        gamma_p=_first_size_with(g, is_perfect_dominating),
    )


def enumerate_perfect_dominating_sets(g: Graph, k: int) -> list[int]:
    """All size-k perfect dominating sets, ascending by bit-mask value."""
    if k < 0 or k > g.n:
        raise BadParamsError(f"set size {k} outside 0..{g.n}")
    return [s for s in _masks_of_size(g.n, k) if is_perfect_dominating(g, s)]
