"""Perfect-coalition predicates, partition validation, and partner counting.

Two disjoint nonempty sets A, B form a perfect coalition when

  (i)   neither A nor B dominates the graph,
  (ii)  every vertex outside A has at most one neighbor in A, and the same
        for B — evaluated over *all* outside vertices, including vertices of
        the other set,
  (iii) A | B is a perfect dominating set.

A partition is a prc-partition when every block is a singleton dominating
set or forms a perfect coalition with some other block.  Validation returns
a certificate assigning each block its role (with the lowest-index witness,
so certificates are canonical) or the first violation in block order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union

from .errors import EmptySetError, OverlappingSetsError, VertexIndexError
from .graphs import Graph, check_vertex_set, mask_of, vertices_of
from .domination import is_dominating, is_perfect_dominating


@dataclass(frozen=True)
class Partition:
    """Ordered blocks (bit masks); a partition has disjoint nonempty blocks covering V."""

    blocks: tuple[int, ...]

    @classmethod
    def from_vertex_lists(cls, lists: Iterable[Iterable[int]]) -> "Partition":
        return cls(tuple(mask_of(vs) for vs in lists))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple(1 << v for v in range(n)))

    def to_vertex_lists(self) -> list[list[int]]:
        return [vertices_of(b) for b in self.blocks]

    def order(self) -> int:
        return len(self.blocks)

    def is_partition_of(self, g: Graph) -> bool:
        union = 0
        for b in self.blocks:
            if b == 0 or b < 0 or (b >> g.n):
                return False
            if union & b:
                return False
            union |= b
        return union == g.full_mask and len(self.blocks) > 0


class ViolationKind(Enum):
    NOT_A_PARTITION = "not_a_partition"
    EMPTY_BLOCK = "empty_block"
    NON_SINGLETON_DOMINATING_BLOCK = "non_singleton_dominating_block"
    NO_PARTNER_FOR_BLOCK = "no_partner_for_block"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    block_index: Optional[int] = None


#: Role value marking a singleton dominating block; any other role is the
#: index of one witnessing partner block.
SINGLETON_DOMINATING = None

Role = Optional[int]


@dataclass(frozen=True)
class PrcCertificate:
    partition: Partition
    roles: tuple[Role, ...]


def satisfies_sparse_neighbor_condition(g: Graph, s: int) -> bool:
    """True iff every vertex outside ``s`` has at most one neighbor in ``s``."""
    check_vertex_set(g, s)
    outside = g.full_mask & ~s
    while outside:
        low = outside & -outside
        v = low.bit_length() - 1
        outside ^= low
        if (g.adj[v] & s).bit_count() >= 2:
            return False
    return True


def is_perfect_coalition(g: Graph, a: int, b: int) -> bool:
    """Decide whether disjoint nonempty sets a, b form a perfect coalition."""
    check_vertex_set(g, a)
    check_vertex_set(g, b)
    if a == 0 or b == 0:
        raise EmptySetError("coalition sets must be nonempty")
    if a & b:
        raise OverlappingSetsError("coalition sets must be disjoint")
    if is_dominating(g, a) or is_dominating(g, b):
        return False
    if not satisfies_sparse_neighbor_condition(g, a):
        return False
    if not satisfies_sparse_neighbor_condition(g, b):
        return False
    return is_perfect_dominating(g, a | b)


def validate_prc_partition(g: Graph, p: Partition) -> Union[PrcCertificate, Violation]:
    """Certify ``p`` as a prc-partition or report the first violation.

    Role witnesses are the lowest partner index, so the certificate for a
    given (graph, partition) pair is unique.
    """
    if len(p.blocks) == 0:
        return Violation(ViolationKind.NOT_A_PARTITION)
    union = 0
    for i, b in enumerate(p.blocks):
        if b == 0:
            return Violation(ViolationKind.EMPTY_BLOCK, i)
        if b < 0 or (b >> g.n) or (union & b):
            return Violation(ViolationKind.NOT_A_PARTITION)
        union |= b
    if union != g.full_mask:
        return Violation(ViolationKind.NOT_A_PARTITION)

    blocks = p.blocks
    dom = [is_dominating(g, b) for b in blocks]
    sparse = [satisfies_sparse_neighbor_condition(g, b) for b in blocks]
    roles: list[Role] = []
    for i, b in enumerate(blocks):
        if dom[i]:
            if b.bit_count() == 1:
                roles.append(SINGLETON_DOMINATING)
                continue
            return Violation(ViolationKind.NON_SINGLETON_DOMINATING_BLOCK, i)
        partner: Optional[int] = None
        if sparse[i]:
            for j in range(len(blocks)):
                if j == i or dom[j] or not sparse[j]:
                    continue
                if is_perfect_dominating(g, b | blocks[j]):
                    partner = j
                    break
        if partner is None:
            return Violation(ViolationKind.NO_PARTNER_FOR_BLOCK, i)
        roles.append(partner)
    return PrcCertificate(partition=p, roles=tuple(roles))


def partner_count(g: Graph, p: Partition, i: int) -> int:
    """Number of blocks forming a perfect coalition with block ``i``."""
    if not 0 <= i < len(p.blocks):
        raise VertexIndexError(f"block index {i} outside 0..{len(p.blocks) - 1}")
    b = p.blocks[i]
    return sum(
        1
        for j in range(len(p.blocks))
        if j != i and is_perfect_coalition(g, b, p.blocks[j])
    )
