"""Generators and recognizers for the structured graph families.

Generators produce concrete labeled graphs with documented labelings:

* ``gdelta:d``  — hub construction: w=0, v=1, u_i = 1+i; K_d on the u's plus
  edges wv and vu_1.
* ``km_k2:m``   — K_m on 0..m-1, disjoint edge (m, m+1).
* ``t1:r``      — K_{r,r} minus a perfect matching; left 0..r-1, right
  r..2r-1, the removed matching pairs i with r+i.
* ``t2:r,s,m``  — K_{r,s} minus an m-matching pairing i with r+i, i < m.
* ``tree_r``    — the 6-vertex spider with legs of lengths 1, 2, 2:
  edges (0,1), (0,2), (0,3), (2,4), (3,5).

Recognizers accept any labeling.  ``construct_known_prc_partition`` returns
a partition of a path or cycle achieving the closed-form value, built from
the explicit small partitions plus the parametric families and the +4 cycle
extension (blocks 1 and 4 absorb the four new vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .coalition import Partition
from .errors import BadParamsError, NoPartitionError
from .graphs import Graph, build_graph, is_connected, vertices_of


class FamilyKind(Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete_bipartite"
    GDELTA = "gdelta"
    KM_K2 = "km_k2"
    T1 = "t1"
    T2 = "t2"
    TREE_R = "tree_r"


_NPARAMS = {
    FamilyKind.PATH: 1,
    FamilyKind.CYCLE: 1,
    FamilyKind.COMPLETE: 1,
    FamilyKind.STAR: 1,
    FamilyKind.COMPLETE_BIPARTITE: 2,
    FamilyKind.GDELTA: 1,
    FamilyKind.KM_K2: 1,
    FamilyKind.T1: 1,
    FamilyKind.T2: 3,
    FamilyKind.TREE_R: 0,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    params: tuple[int, ...] = ()

    def text(self) -> str:
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}:{','.join(str(p) for p in self.params)}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the CLI text form, e.g. "path:9", "t2:3,4,1", "tree_r"."""
    name, _, rest = text.strip().partition(":")
    try:
        kind = FamilyKind(name)
    except ValueError as exc:
        raise BadParamsError(f"unknown family kind {name!r}") from exc
    if rest:
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError as exc:
            raise BadParamsError(f"non-integer parameters in {text!r}") from exc
    else:
        params = ()
    if len(params) != _NPARAMS[kind]:
        raise BadParamsError(
            f"{kind.value} takes {_NPARAMS[kind]} parameter(s), got {len(params)}"
        )
    return FamilySpec(kind, params)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParamsError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParamsError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParamsError("complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: center 0, leaves 1..n-1."""
    if n < 2:
        raise BadParamsError("star needs n >= 2")
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite_graph(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise BadParamsError("complete bipartite graph needs r, s >= 1")
    return build_graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def gdelta_graph(d: int) -> Graph:
    if d < 2:
        raise BadParamsError("hub construction needs max degree >= 2")
    n = d + 2
    edges = [(0, 1), (1, 2)]
    edges += [(i, j) for i in range(2, n) for j in range(i + 1, n)]
    return build_graph(n, edges)


def gdelta_hub_partition(d: int) -> Partition:
    """The partition {{w}, {v,u_1}, {u_2}, ..., {u_d}} on gdelta_graph(d)."""
    if d < 2:
        raise BadParamsError("hub construction needs max degree >= 2")
    blocks = [[0], [1, 2]] + [[i] for i in range(3, d + 2)]
    return Partition.from_vertex_lists(blocks)


def km_k2_graph(m: int) -> Graph:
    if m < 2:
        raise BadParamsError("clique-plus-edge needs m >= 2")
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)] + [(m, m + 1)]
    return build_graph(m + 2, edges)


def t1_graph(r: int) -> Graph:
    if r < 2:
        raise BadParamsError("t1 needs r >= 2")
    return build_graph(2 * r, [(i, r + j) for i in range(r) for j in range(r) if i != j])


def t2_graph(r: int, s: int, m: int) -> Graph:
    if r < 2 or s < 2:
        raise BadParamsError("t2 needs r, s >= 2")
    if m < 0 or m >= min(r, s):
        raise BadParamsError(f"t2 matching size must satisfy 0 <= m < min(r, s) = {min(r, s)}")
    return build_graph(
        r + s,
        [(i, r + j) for i in range(r) for j in range(s) if not (i == j and i < m)],
    )


def tree_r_graph() -> Graph:
    return build_graph(6, [(0, 1), (0, 2), (0, 3), (2, 4), (3, 5)])


def family_b_example(independent_size: int, clique_size: int) -> Graph:
    """A canonical member of the leaf-anchored family: x=0, y=1,
    independent part 2..2+a-1, clique part after it, with the full cut."""
    a, b = independent_size, clique_size
    if a < 1 or b < 1:
        raise BadParamsError("family-B builder needs both parts nonempty")
    a_lo, b_lo = 2, 2 + a
    n = 2 + a + b
    edges = [(0, 1)]
    edges += [(1, v) for v in range(a_lo, a_lo + a)]
    edges += [(u, v) for u in range(a_lo, a_lo + a) for v in range(b_lo, b_lo + b)]
    edges += [(u, v) for u in range(b_lo, b_lo + b) for v in range(u + 1, b_lo + b)]
    return build_graph(n, edges)


def generate(spec: FamilySpec) -> Graph:
    """Labeled graph for a family spec; BadParamsError outside the ranges."""
    k, p = spec.kind, spec.params
    if k is FamilyKind.PATH:
        return path_graph(p[0])
    if k is FamilyKind.CYCLE:
        return cycle_graph(p[0])
    if k is FamilyKind.COMPLETE:
        return complete_graph(p[0])
    if k is FamilyKind.STAR:
        return star_graph(p[0])
    if k is FamilyKind.COMPLETE_BIPARTITE:
        return complete_bipartite_graph(p[0], p[1])
    if k is FamilyKind.GDELTA:
        return gdelta_graph(p[0])
    if k is FamilyKind.KM_K2:
        return km_k2_graph(p[0])
    if k is FamilyKind.T1:
        return t1_graph(p[0])
    if k is FamilyKind.T2:
        return t2_graph(p[0], p[1], p[2])
    return tree_r_graph()


# ---------------------------------------------------------------------------
# recognizers
# ---------------------------------------------------------------------------

class TClass(Enum):
    T1 = "t1"
    T2 = "t2"
    NEITHER = "neither"


@dataclass(frozen=True)
class FamilyMembership:
    in_B: bool
    witness_leaf: Optional[int]
    t_class: TClass


def _family_b_witness(g: Graph) -> Optional[int]:
    # A leaf x with support y such that, with A = N(y)\{x} and
    # B = V \ (A | {x,y}): B is nonempty (excludes stars), A is independent,
    # B induces a clique, and [A, B] is full.
    for x in range(g.n):
        if g.degree(x) != 1:
            continue
        y = g.adj[x].bit_length() - 1
        a_mask = g.adj[y] & ~(1 << x)
        b_mask = g.full_mask & ~(a_mask | (1 << x) | (1 << y))
        if b_mask == 0:
            continue
        ok = True
        for v in vertices_of(a_mask):
            if g.adj[v] & a_mask or (g.adj[v] & b_mask) != b_mask:
                ok = False
                break
        if not ok:
            continue
        for v in vertices_of(b_mask):
            if (g.adj[v] & b_mask) != b_mask & ~(1 << v):
                ok = False
                break
        if ok:
            return x
    return None


def _two_coloring(g: Graph) -> Optional[tuple[int, int]]:
    # 2-coloring by traversal; None when an odd cycle exists
    color = [-1] * g.n
    sides = [0, 0]
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        sides[0] |= 1 << start
        stack = [start]
        while stack:
            u = stack.pop()
            for w in vertices_of(g.adj[u]):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    sides[color[w]] |= 1 << w
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return sides[0], sides[1]


def _t_classify(g: Graph) -> TClass:
    if g.n < 4:
        return TClass.NEITHER
    if any(g.degree(v) == 0 for v in range(g.n)):
        return TClass.NEITHER
    if not is_connected(g):
        # the only disconnected member is K_{2,2} minus a perfect matching,
        # i.e. two disjoint edges
        if g.n == 4 and g.edge_count == 2 and all(g.degree(v) == 1 for v in range(4)):
            return TClass.T1
        return TClass.NEITHER
    coloring = _two_coloring(g)
    if coloring is None:
        return TClass.NEITHER
    left, right = coloring
    r, s = left.bit_count(), right.bit_count()
    if r < 2 or s < 2:
        return TClass.NEITHER
    missing = 0
    for u in vertices_of(left):
        gap = right & ~g.adj[u]
        if gap.bit_count() > 1:
            return TClass.NEITHER
        missing += gap.bit_count()
    for w in vertices_of(right):
        if (left & ~g.adj[w]).bit_count() > 1:
            return TClass.NEITHER
    if r == s and missing == r:
        return TClass.T1
    if missing < min(r, s):
        return TClass.T2
    return TClass.NEITHER


def _membership(g: Graph) -> FamilyMembership:
    leaf = _family_b_witness(g)
    return FamilyMembership(in_B=leaf is not None, witness_leaf=leaf, t_class=_t_classify(g))


def is_in_family_B(g: Graph) -> FamilyMembership:
    """Leaf-anchored family membership (with the witnessing leaf when found)."""
    return _membership(g)


def classify_T1_T2(g: Graph) -> FamilyMembership:
    """Recognize complete-bipartite-minus-matching graphs (any labeling)."""
    return _membership(g)


# ---------------------------------------------------------------------------
# closed forms and the partitions attaining them
# ---------------------------------------------------------------------------

def formula_prc_path(n: int) -> int:
    if n < 1:
        raise BadParamsError("path needs n >= 1")
    if n == 1:
        return 1
    if n == 2:
        return 2
    if n == 3:
        return 0
    if n in (4, 6, 8):
        return 4
    if n == 5:
        return 3
    if n in (7, 9, 10, 11, 13):
        return 5
    return 6


def formula_prc_cycle(n: int) -> int:
    if n < 3:
        raise BadParamsError("cycle needs n >= 3")
    if n in (3, 4, 6):
        return n
    if n == 5:
        return 3
    if n == 8:
        return 4
    if n in (7, 11):
        return 5
    return 6


_PATH_EXPLICIT = {
    1: [[1]],
    2: [[1], [2]],
    4: [[1], [2], [3], [4]],
    5: [[1, 5], [2], [3, 4]],
    6: [[2], [5], [3, 6], [1, 4]],
    7: [[2, 6], [1, 7], [3], [4], [5]],
    8: [[2, 3, 6], [1, 4, 5], [7], [8]],
    9: [[3, 6, 9], [1, 4, 8], [2], [5], [7]],
    10: [[1, 7], [4, 10], [2, 9], [3, 6], [5, 8]],
    11: [[1, 4, 8, 11], [2, 3, 6, 10], [5], [7], [9]],
    13: [[1, 4, 5, 8, 12], [2, 3, 7, 10, 13], [6], [9], [11]],
}

_CYCLE_EXPLICIT = {
    5: [[1], [2, 3], [4, 5]],
    7: [[1, 7], [2, 6], [3], [4], [5]],
    8: [[1, 2, 5], [6], [3, 4, 7], [8]],
    9: [[1, 7], [2, 8], [3, 9], [4], [5], [6]],
    11: [[1, 4, 8, 11], [2, 3, 6, 10], [5], [9], [7]],
    12: [[1, 7], [2, 8], [3, 9], [4, 10], [5, 11], [6, 12]],
    15: [[1, 7, 13], [2, 8, 14], [3, 9, 15], [4, 10], [5, 11], [6, 12]],
}

# bases of the +4 extension; block order matters (blocks 0 and 3 grow)
_CYCLE_BASES = {
    10: [[1, 5, 8], [4], [2], [3, 6, 10], [7], [9]],
    13: [[1, 5, 8, 11], [2], [4], [3, 6, 13], [9, 12], [7, 10]],
    16: [[1, 5, 8, 11, 14], [4], [2], [3, 6, 16], [9, 12, 15], [7, 10, 13]],
    19: [[1, 8, 11, 14, 17], [4, 7], [2, 5], [3, 6, 9, 19], [12, 15, 18], [10, 13, 16]],
}


def _one_based(blocks: list[list[int]]) -> Partition:
    return Partition.from_vertex_lists([[v - 1 for v in blk] for blk in blocks])


def _path_parametric(n: int) -> list[list[int]]:
    if n % 2 == 0:  # n >= 12 even
        v1 = [2, 6, 9] + [4 * k for k in range(3, n // 4 + 1) if 4 * k <= n]
        v1 += [4 * k + 1 for k in range(3, n) if 4 * k + 1 <= n]
        v2 = [1, 4, 7] + [4 * k - 1 for k in range(3, n) if 4 * k - 1 <= n]
        v2 += [4 * k + 2 for k in range(3, n) if 4 * k + 2 <= n]
        return [sorted(v1), sorted(v2), [5], [3], [10], [8]]
    # n >= 15 odd
    v1 = [2, 9, 12] + [4 * k - 1 for k in range(4, n) if 4 * k - 1 <= n]
    v1 += [4 * k for k in range(4, n) if 4 * k <= n]
    v2 = [1, 4, 7, 10] + [4 * k - 2 for k in range(4, n) if 4 * k - 2 <= n]
    v2 += [4 * k + 1 for k in range(4, n) if 4 * k + 1 <= n]
    return [sorted(v1), sorted(v2), [5, 8], [3, 6], [13], [11]]


def _cycle_blocks(n: int) -> list[list[int]]:
    if n in (3, 4, 6):
        return [[v] for v in range(1, n + 1)]
    if n in _CYCLE_EXPLICIT:
        return _CYCLE_EXPLICIT[n]
    if n in _CYCLE_BASES:
        return [list(b) for b in _CYCLE_BASES[n]]
    # n >= 14, n not in {15, 16}: extend the partition of C_{n-4}
    base = _cycle_blocks(n - 4)
    k = n - 4
    base[0] = base[0] + [k + 1, k + 2]
    base[3] = base[3] + [k + 3, k + 4]
    return base


def construct_known_prc_partition(kind: str, n: int) -> Partition:
    """A partition of P_n or C_n achieving the closed-form value.

    Raises NoPartitionError when the value is 0 (the 3-vertex path) and
    BadParamsError outside the parameter ranges.
    """
    if kind == "path":
        if n < 1:
            raise BadParamsError("path needs n >= 1")
        if n == 3:
            raise NoPartitionError("the 3-vertex path has no prc-partition")
        if n in _PATH_EXPLICIT:
            return _one_based(_PATH_EXPLICIT[n])
        if n >= 12:
            return _one_based(_path_parametric(n))
        raise AssertionError(f"unhandled path order {n}")
    if kind == "cycle":
        if n < 3:
            raise BadParamsError("cycle needs n >= 3")
        return _one_based(_cycle_blocks(n))
    raise BadParamsError(f"kind must be 'path' or 'cycle', got {kind!r}")
