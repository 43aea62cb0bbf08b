"""Hot search kernels over int64 adjacency masks.

Every function here is written in a numba-compatible subset and compiled
with ``@njit(cache=True)`` by default.  Setting the environment variable
``PERFCOAL_NO_NUMBA=1`` (or numba being unavailable) selects the pure
interpreted path: the same source runs on numpy scalars, so both modes are
behaviorally identical.  ``benchmarks/bench_kernels.py`` compares the two.

Masks are int64 (graphs here are guarded to n <= 20, well inside the sign
bit).  Partitions are enumerated as restricted growth strings: vertex v may
join blocks 0..used, where block ``used`` opens a new block, which visits
every set partition exactly once in lexicographic RGS order.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "PERFCOAL_NO_NUMBA"

try:
    from numba import njit as _numba_njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency normally
    HAVE_NUMBA = False

PURE_FALLBACK = (not HAVE_NUMBA) or os.environ.get(ENV_FLAG, "").strip() not in ("", "0")
USE_NUMBA = not PURE_FALLBACK


def _jit(fn):
    if USE_NUMBA:
        return _numba_njit(cache=True)(fn)
    return fn


# mode selectors for batch_prc_over_masks
FILTER_ALL = 0
FILTER_CONNECTED = 1
FILTER_CONNECTED_MIN_DEGREE_ONE = 2
FILTER_TRIANGLE_FREE = 3


@_jit
def popcount(x):
    # SWAR; valid for nonnegative int64
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    x = x + (x >> 8)
    x = x + (x >> 16)
    x = x + (x >> 32)
    return x & 0x7F


@_jit
def _dominates(adj, n, full, m):
    cover = m
    t = m
    while t != 0:
        low = t & (-t)
        cover |= adj[popcount(low - 1)]
        t ^= low
    return cover == full


@_jit
def _sparse_outside(adj, n, m):
    # every vertex outside m has at most one neighbor in m
    for u in range(n):
        if (m >> u) & 1 == 0 and popcount(adj[u] & m) >= 2:
            return False
    return True


@_jit
def _perfect_dominates(adj, n, m):
    for u in range(n):
        if (m >> u) & 1 == 0 and popcount(adj[u] & m) != 1:
            return False
    return True


@_jit
def _prc_leaf_valid(adj, n, full, block_mask, block_size, used, dom_buf, sparse_buf):
    for i in range(used):
        m = block_mask[i]
        dom_buf[i] = 1 if _dominates(adj, n, full, m) else 0
        sparse_buf[i] = 1 if _sparse_outside(adj, n, m) else 0
    for i in range(used):
        if dom_buf[i] == 1:
            if block_size[i] == 1:
                continue
            return False
        if sparse_buf[i] == 0:
            return False
        found = False
        for j in range(used):
            if j == i or dom_buf[j] == 1 or sparse_buf[j] == 0:
                continue
            if _perfect_dominates(adj, n, block_mask[i] | block_mask[j]):
                found = True
                break
        if not found:
            return False
    return True


@_jit
def prc_search(adj, n, prune):
    """Maximum order of a prc-partition by DFS over restricted growth strings.

    With ``prune`` False this is the oracle: every partition is enumerated
    and validated (``tested`` equals the Bell number of n).  With ``prune``
    True three sound rules cut the tree: an order bound (used blocks +
    unassigned vertices <= best), dead blocks (an assigned outside vertex
    with two neighbors in a block, or a dominating block of size >= 2), and
    leaves are only validated when they would improve the best order.

    Returns (best_k, nodes, tested, best_choice); best_choice holds the
    lexicographically smallest maximum-order RGS, or -1s when best_k == 0.
    """
    best_choice = np.full(n, -1, np.int64)
    nodes = 0
    tested = 0
    best_k = 0
    if n == 0:
        return 0, nodes, tested, best_choice
    choice = np.full(n, -1, np.int64)
    block_mask = np.zeros(n, np.int64)
    block_size = np.zeros(n, np.int64)
    dom_buf = np.zeros(n, np.uint8)
    sparse_buf = np.zeros(n, np.uint8)
    full = (np.int64(1) << n) - 1
    used = 0
    v = 0
    while v >= 0:
        if v == n:
            tested += 1
            if (not prune) or used > best_k:
                if _prc_leaf_valid(adj, n, full, block_mask, block_size, used, dom_buf, sparse_buf):
                    if used > best_k:
                        best_k = used
                        for t in range(n):
                            best_choice[t] = choice[t]
            v -= 1
            continue
        bit = np.int64(1) << v
        if choice[v] >= 0:
            b = choice[v]
            block_mask[b] &= ~bit
            block_size[b] -= 1
            if block_size[b] == 0:
                used -= 1
        c = choice[v] + 1
        placed = False
        while c <= used:
            ok = True
            if prune:
                newused = used + 1 if c == used else used
                if newused + (n - v - 1) <= best_k:
                    ok = False
                if ok:
                    # v stays outside every block i != c along this branch;
                    # two neighbors inside block i make that block dead
                    for i in range(used):
                        if i != c and popcount(adj[v] & block_mask[i]) >= 2:
                            ok = False
                            break
                if ok:
                    newmask = block_mask[c] | bit
                    # same rule from the other side: an already-assigned
                    # vertex outside c gaining a second neighbor in c
                    t = adj[v] & (bit - 1)
                    while t != 0:
                        low = t & (-t)
                        u = popcount(low - 1)
                        if choice[u] != c and popcount(adj[u] & newmask) >= 2:
                            ok = False
                            break
                        t ^= low
                    # a dominating block of size >= 2 can never take a role
                    if ok and block_size[c] >= 1 and _dominates(adj, n, full, newmask):
                        ok = False
            if ok:
                if c == used:
                    used += 1
                block_mask[c] |= bit
                block_size[c] += 1
                choice[v] = c
                placed = True
                nodes += 1
                break
            c += 1
        if placed:
            v += 1
        else:
            choice[v] = -1
            v -= 1
    return best_k, nodes, tested, best_choice


@_jit
def _coalition_leaf_valid(adj, n, full, block_mask, block_size, used, dom_buf):
    for i in range(used):
        dom_buf[i] = 1 if _dominates(adj, n, full, block_mask[i]) else 0
    for i in range(used):
        if dom_buf[i] == 1:
            if block_size[i] == 1:
                continue
            return False
        found = False
        for j in range(used):
            if j == i or dom_buf[j] == 1:
                continue
            if _dominates(adj, n, full, block_mask[i] | block_mask[j]):
                found = True
                break
        if not found:
            return False
    return True


@_jit
def coalition_search(adj, n):
    """Maximum order of an ordinary coalition partition, full enumeration.

    Returns (best_k, tested) with tested equal to the Bell number of n.
    """
    if n == 0:
        return 0, 0
    choice = np.full(n, -1, np.int64)
    block_mask = np.zeros(n, np.int64)
    block_size = np.zeros(n, np.int64)
    dom_buf = np.zeros(n, np.uint8)
    full = (np.int64(1) << n) - 1
    used = 0
    best_k = 0
    tested = 0
    v = 0
    while v >= 0:
        if v == n:
            tested += 1
            if used > best_k and _coalition_leaf_valid(adj, n, full, block_mask, block_size, used, dom_buf):
                best_k = used
            v -= 1
            continue
        bit = np.int64(1) << v
        if choice[v] >= 0:
            b = choice[v]
            block_mask[b] &= ~bit
            block_size[b] -= 1
            if block_size[b] == 0:
                used -= 1
        c = choice[v] + 1
        if c <= used:
            if c == used:
                used += 1
            block_mask[c] |= bit
            block_size[c] += 1
            choice[v] = c
            v += 1
        else:
            choice[v] = -1
            v -= 1
    return best_k, tested


@_jit
def max_partner_count_over_valid(adj, n):
    """Worst per-block partner count over all valid prc-partitions.

    Enumerates every partition; for each valid one counts, per block, the
    blocks it forms a perfect coalition with.  Returns -1 when the graph has
    no prc-partition at all.
    """
    if n == 0:
        return -1
    choice = np.full(n, -1, np.int64)
    block_mask = np.zeros(n, np.int64)
    block_size = np.zeros(n, np.int64)
    dom_buf = np.zeros(n, np.uint8)
    sparse_buf = np.zeros(n, np.uint8)
    full = (np.int64(1) << n) - 1
    used = 0
    worst = -1
    v = 0
    while v >= 0:
        if v == n:
            if _prc_leaf_valid(adj, n, full, block_mask, block_size, used, dom_buf, sparse_buf):
                for i in range(used):
                    if dom_buf[i] == 1:
                        cnt = 0  # a dominating block is in no coalition
                    else:
                        cnt = 0
                        for j in range(used):
                            if j == i or dom_buf[j] == 1 or sparse_buf[j] == 0:
                                continue
                            if _perfect_dominates(adj, n, block_mask[i] | block_mask[j]):
                                cnt += 1
                    if cnt > worst:
                        worst = cnt
            v -= 1
            continue
        bit = np.int64(1) << v
        if choice[v] >= 0:
            b = choice[v]
            block_mask[b] &= ~bit
            block_size[b] -= 1
            if block_size[b] == 0:
                used -= 1
        c = choice[v] + 1
        if c <= used:
            if c == used:
                used += 1
            block_mask[c] |= bit
            block_size[c] += 1
            choice[v] = c
            v += 1
        else:
            choice[v] = -1
            v -= 1
    return worst


# ---------------------------------------------------------------------------
# batch drivers over labeled-graph edge masks (acceptance sweeps)
# ---------------------------------------------------------------------------

@_jit
def decode_edge_mask(mask, n, adj):
    # edge bit order: (0,1),(0,2),...,(0,n-1),(1,2),... row-major upper triangle
    for i in range(n):
        adj[i] = 0
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> e) & 1:
                adj[i] |= np.int64(1) << j
                adj[j] |= np.int64(1) << i
            e += 1


@_jit
def _connected(adj, n, full):
    if n <= 1:
        return True
    seen = np.int64(1)
    while True:
        grow = seen
        t = seen
        while t != 0:
            low = t & (-t)
            grow |= adj[popcount(low - 1)]
            t ^= low
        if grow == seen:
            break
        seen = grow
    return seen == full


@_jit
def _min_degree(adj, n):
    md = n
    for v in range(n):
        d = popcount(adj[v])
        if d < md:
            md = d
    return md


@_jit
def _max_degree(adj, n):
    md = 0
    for v in range(n):
        d = popcount(adj[v])
        if d > md:
            md = d
    return md


@_jit
def _triangle_free(adj, n):
    for i in range(n):
        t = adj[i] >> (i + 1)
        j = i + 1
        while t != 0:
            if t & 1 and (adj[i] & adj[j]) != 0:
                return False
            t >>= 1
            j += 1
    return True


@_jit
def batch_prc_over_masks(n, mode):
    """prc value for every labeled graph on n vertices passing ``mode``.

    Returns (count, masks, prcs); only the first ``count`` entries of the
    output arrays are meaningful.
    """
    nedges = n * (n - 1) // 2
    total = np.int64(1) << nedges
    masks = np.empty(total, np.int64)
    prcs = np.empty(total, np.int8)
    adj = np.zeros(n, np.int64)
    full = (np.int64(1) << n) - 1
    cnt = 0
    for mask in range(total):
        decode_edge_mask(mask, n, adj)
        if mode == FILTER_CONNECTED:
            if not _connected(adj, n, full):
                continue
        elif mode == FILTER_CONNECTED_MIN_DEGREE_ONE:
            if _min_degree(adj, n) != 1 or not _connected(adj, n, full):
                continue
        elif mode == FILTER_TRIANGLE_FREE:
            if not _triangle_free(adj, n):
                continue
        k, _, _, _ = prc_search(adj, n, True)
        masks[cnt] = mask
        prcs[cnt] = k
        cnt += 1
    return cnt, masks, prcs


@_jit
def batch_oracle_mismatch(n):
    """First edge mask where pruned search and oracle disagree, else -1."""
    nedges = n * (n - 1) // 2
    total = np.int64(1) << nedges
    adj = np.zeros(n, np.int64)
    for mask in range(total):
        decode_edge_mask(mask, n, adj)
        k1, _, _, _ = prc_search(adj, n, True)
        k2, _, _, _ = prc_search(adj, n, False)
        if k1 != k2:
            return mask
    return np.int64(-1)


@_jit
def batch_prc_exceeds_coalition(n):
    """First edge mask where prc > C (violating PRC <= C), else -1."""
    nedges = n * (n - 1) // 2
    total = np.int64(1) << nedges
    adj = np.zeros(n, np.int64)
    for mask in range(total):
        decode_edge_mask(mask, n, adj)
        k, _, _, _ = prc_search(adj, n, True)
        c, _ = coalition_search(adj, n)
        if k > c:
            return mask
    return np.int64(-1)


@_jit
def batch_delta_bound(n):
    """Partner-count bound check over all connected labeled graphs on n vertices.

    Returns (checked, first_bad_mask): first_bad_mask is the first connected
    graph where some block of some valid prc-partition has more than
    max-degree partners, or -1 when the bound holds everywhere.
    """
    nedges = n * (n - 1) // 2
    total = np.int64(1) << nedges
    adj = np.zeros(n, np.int64)
    full = (np.int64(1) << n) - 1
    checked = 0
    for mask in range(total):
        decode_edge_mask(mask, n, adj)
        if not _connected(adj, n, full):
            continue
        checked += 1
        worst = max_partner_count_over_valid(adj, n)
        if worst > _max_degree(adj, n):
            return checked, mask
    return checked, np.int64(-1)


@_jit
def batch_disconnected_delta_bound(n):
    """Observation-2.4 check: disconnected graphs, partner count <= maxdeg + 1.

    Returns (checked, first_bad_mask).
    """
    nedges = n * (n - 1) // 2
    total = np.int64(1) << nedges
    adj = np.zeros(n, np.int64)
    full = (np.int64(1) << n) - 1
    checked = 0
    for mask in range(total):
        decode_edge_mask(mask, n, adj)
        if _connected(adj, n, full):
            continue
        checked += 1
        worst = max_partner_count_over_valid(adj, n)
        if worst > _max_degree(adj, n) + 1:
            return checked, mask
    return checked, np.int64(-1)
