"""Immutable bit-mask graphs, structural queries, and graph6 / edge-list I/O.

Vertices are 0-based contiguous integers ``0..n-1``.  A vertex set is a plain
``int`` bit mask (bit ``v`` set means vertex ``v`` is in the set), so all set
algebra is single-word ``&``/``|``/``~``.  Adjacency is stored as one mask per
vertex.  The representation is capped at 64 vertices; graph6 I/O additionally
caps at 62 (single-byte size records).

Mapping to the usual 1-based labels used in the literature: vertex ``v_i``
is index ``i - 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import (
    MalformedRecordError,
    SelfLoopError,
    UnsupportedSizeError,
    VertexIndexError,
)

MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62


def mask_of(vertices: Iterable[int]) -> int:
    """Bit mask of an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    """Sorted vertex indices of a bit mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1, adjacency as bit masks.

    Invariants (enforced by :func:`build_graph`): adjacency is symmetric,
    there are no self-loops, and ``edge_count`` is half the degree sum.
    """

    n: int
    adj: tuple[int, ...]
    edge_count: int

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> int:
        """Open neighborhood N(v) as a mask."""
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> int:
        """Closed neighborhood N[v] as a mask."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ordered pairs (u, v) with u < v, lexicographic."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def adj_array(self) -> np.ndarray:
        """Adjacency masks as an int64 array for the numeric kernels."""
        return np.array(self.adj, dtype=np.int64)


def check_vertex_set(g: Graph, mask: int) -> None:
    """Raise if ``mask`` has bits outside 0..n-1 or is negative."""
    if mask < 0 or mask >> g.n:
        raise VertexIndexError(f"vertex set {bin(mask)} not valid for a graph of order {g.n}")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered index pairs; duplicates are collapsed.

    Raises :class:`VertexIndexError` for an endpoint outside 0..n-1 and
    :class:`SelfLoopError` for u == v.
    """
    if n < 0:
        raise VertexIndexError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"at most {MAX_VERTICES} vertices supported, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexIndexError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    m = sum(a.bit_count() for a in adj) // 2
    return Graph(n=n, adj=tuple(adj), edge_count=m)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_bit_positions(n: int) -> Iterator[tuple[int, int]]:
    # upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield (i, j)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (n <= 62).

    Accepts an optional ``>>graph6<<`` header and surrounding whitespace.
    Raises :class:`MalformedRecordError` for bad length/characters and
    :class:`UnsupportedSizeError` for multi-byte size records (n >= 63).
    """
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise MalformedRecordError("empty graph6 record")
    data = [ord(c) for c in s]
    for b in data:
        if b < 63 or b > 126:
            raise MalformedRecordError(f"graph6 byte {b} outside 63..126")
    if data[0] == 126:
        raise UnsupportedSizeError("graph6 records with n > 62 are not supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise MalformedRecordError(
            f"graph6 record for n={n} needs {nbytes} adjacency bytes, got {len(data) - 1}"
        )
    bits = 0
    for b in data[1:]:
        bits = (bits << 6) | (b - 63)
    total = nbytes * 6
    if total > nbits and bits & ((1 << (total - nbits)) - 1):
        raise MalformedRecordError("nonzero padding bits in graph6 record")
    edges = []
    for k, (i, j) in enumerate(_g6_bit_positions(n)):
        if (bits >> (total - 1 - k)) & 1:
            edges.append((i, j))
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a graph (n <= 62) as a graph6 record; inverse of parse_graph6."""
    if g.n > GRAPH6_MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 encoding supports n <= {GRAPH6_MAX_VERTICES}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    nb = 0
    for i, j in _g6_bit_positions(g.n):
        acc = (acc << 1) | ((g.adj[i] >> j) & 1)
        nb += 1
        if nb == 6:
            out.append(chr(acc + 63))
            acc = 0
            nb = 0
    if nb:
        acc <<= 6 - nb
        out.append(chr(acc + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# plain edge-list text format: first line "n m", then m lines "u v" (0-based)
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format; raises MalformedRecordError."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise MalformedRecordError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedRecordError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MalformedRecordError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise MalformedRecordError(f"header declares {m} edges, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedRecordError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise MalformedRecordError(f"non-integer edge line {ln!r}") from exc
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structure report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    """Degree extremes, connectivity, girth, and leaf/support masks.

    ``girth`` is None exactly when the graph is acyclic; ``triangle_free``
    is equivalent to girth absent or > 3.
    """

    min_degree: int
    max_degree: int
    connected: bool
    triangle_free: bool
    girth: Optional[int]
    leaves: int
    support_vertices: int


def is_connected(g: Graph) -> bool:
    """True for the empty and one-vertex graphs; BFS reachability otherwise."""
    if g.n <= 1:
        return True
    seen = 1
    while True:
        grow = seen
        m = seen
        while m:
            low = m & -m
            grow |= g.adj[low.bit_length() - 1]
            m ^= low
        if grow == seen:
            break
        seen = grow
    return seen == g.full_mask


def _shortest_cycle_through(g: Graph, root: int) -> Optional[int]:
    # BFS from root; an edge between visited vertices that is not a tree edge
    # closes a cycle of length dist[u] + dist[w] + 1 (minimized over roots
    # this is exact).
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[root] = 0
    q = deque([root])
    best: Optional[int] = None
    while q:
        u = q.popleft()
        m = g.adj[u]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                parent[w] = u
                q.append(w)
            elif w != parent[u]:
                c = dist[u] + dist[w] + 1
                if best is None or c < best:
                    best = c
    return best


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None if the graph is acyclic."""
    best: Optional[int] = None
    for v in range(g.n):
        c = _shortest_cycle_through(g, v)
        if c is not None and (best is None or c < best):
            best = c
    return best


def structure_report(g: Graph) -> StructureReport:
    degs = [g.degree(v) for v in range(g.n)]
    leaves = mask_of(v for v in range(g.n) if degs[v] == 1)
    supports = mask_of(v for v in range(g.n) if g.adj[v] & leaves)
    gg = girth(g)
    return StructureReport(
        min_degree=min(degs) if degs else 0,
        max_degree=max(degs) if degs else 0,
        connected=is_connected(g),
        triangle_free=gg is None or gg > 3,
        girth=gg,
        leaves=leaves,
        support_vertices=supports,
    )
