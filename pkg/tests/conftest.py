"""Shared helpers: an independent set-based reference implementation.

Everything in the ``ref_``-prefixed family is deliberately naive (frozensets
and itertools, no bit masks) so tests can cross-check the package against a
second route that shares no code with it.
"""

from itertools import combinations

import pytest

from perfcoal.graphs import Graph


# ---------------------------------------------------------------------------
# graph plumbing
# ---------------------------------------------------------------------------

def graph_from_edge_mask(n: int, mask: int) -> Graph:
    # same row-major upper-triangle bit order as the batch kernels
    adj = [0] * n
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> e) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            e += 1
    return Graph(n=n, adj=tuple(adj), edge_count=sum(a.bit_count() for a in adj) // 2)


def adjsets_of(g: Graph) -> list[set[int]]:
    return [{w for w in range(g.n) if (g.adj[v] >> w) & 1} for v in range(g.n)]


def set_of_mask(mask: int) -> frozenset[int]:
    out = set()
    v = 0
    while mask:
        if mask & 1:
            out.add(v)
        mask >>= 1
        v += 1
    return frozenset(out)


# ---------------------------------------------------------------------------
# reference predicates (independent of the package's bit-mask route)
# ---------------------------------------------------------------------------

def ref_is_dominating(n, adj, s):
    return all(v in s or adj[v] & s for v in range(n))


def ref_is_perfect_dominating(n, adj, s):
    return all(len(adj[v] & s) == 1 for v in range(n) if v not in s)


def ref_sparse(n, adj, s):
    return all(len(adj[v] & s) <= 1 for v in range(n) if v not in s)


def ref_is_perfect_coalition(n, adj, a, b):
    if ref_is_dominating(n, adj, a) or ref_is_dominating(n, adj, b):
        return False
    if not (ref_sparse(n, adj, a) and ref_sparse(n, adj, b)):
        return False
    return ref_is_perfect_dominating(n, adj, a | b)


def ref_all_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in ref_all_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] | {first}] + smaller[i + 1:]
        yield smaller + [{first}]


def ref_valid_prc(n, adj, blocks):
    fb = [frozenset(b) for b in blocks]
    for i, b in enumerate(fb):
        if len(b) == 1 and ref_is_dominating(n, adj, b):
            continue
        if not any(j != i and ref_is_perfect_coalition(n, adj, b, fb[j]) for j in range(len(fb))):
            return False
    return True


def ref_prc(n, adj):
    best = 0
    for p in ref_all_partitions(list(range(n))):
        if len(p) > best and ref_valid_prc(n, adj, p):
            best = len(p)
    return best


def ref_pds_of_size(n, adj, k):
    return [
        frozenset(c) for c in combinations(range(n), k)
        if ref_is_perfect_dominating(n, adj, frozenset(c))
    ]


def ref_t_classify(g: Graph) -> str:
    # try every subset as the left side of a complete-bipartite-minus-matching
    n, adj = g.n, adjsets_of(g)
    for left_mask in range(1 << n):
        left = set_of_mask(left_mask)
        right = frozenset(range(n)) - left
        if len(left) < 2 or len(right) < 2:
            continue
        if any(adj[v] & left for v in left) or any(adj[v] & right for v in right):
            continue
        if any(len(right - adj[v]) > 1 for v in left):
            continue
        if any(len(left - adj[v]) > 1 for v in right):
            continue
        missing = sum(len(right - adj[v]) for v in left)
        if len(left) == len(right) and missing == len(left):
            return "t1"
        if missing < min(len(left), len(right)):
            return "t2"
    return "neither"


def tree_canonical_form(g: Graph) -> str:
    """AHU canonical string of a free tree (root at the center)."""
    n = g.n
    if n == 0:
        return ""
    if n == 1:
        return "()"
    adj = adjsets_of(g)
    deg = [len(adj[v]) for v in range(n)]
    alive = [True] * n
    remaining = n
    layer = [v for v in range(n) if deg[v] <= 1]
    while remaining > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            remaining -= 1
            for w in adj[v]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(n) if alive[v]]

    def encode(root, parent):
        subs = sorted(encode(w, root) for w in adj[root] if w != parent)
        return "(" + "".join(subs) + ")"

    return min(encode(c, -1) for c in centers)


@pytest.fixture(scope="session")
def bell_numbers():
    return {0: 1, 1: 1, 2: 2, 3: 5, 4: 15, 5: 52, 6: 203, 7: 877, 8: 4140, 9: 21147}
