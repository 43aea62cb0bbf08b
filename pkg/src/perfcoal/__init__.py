"""Exact computation of perfect coalition partitions in small graphs.

A perfect coalition is a pair of disjoint non-dominating vertex sets, each
with at most one neighbor per outside vertex, whose union is a perfect
dominating set; the perfect coalition number of a graph is the largest
order of a partition in which every block is a singleton dominating set or
has such a partner.  This package decides the predicates, computes the
number exactly (pruned search checked against a full-enumeration oracle),
generates and recognizes the structured families involved, and drives
graph6 sweeps and executable theorem suites from a CLI.
"""

from .errors import (
    BadParamsError,
    EmptySetError,
    MalformedRecordError,
    NoPartitionError,
    OverlappingSetsError,
    PerfcoalError,
    SelfLoopError,
    TooLargeError,
    UnsupportedSizeError,
    VertexIndexError,
)
from .graphs import (
    Graph,
    StructureReport,
    build_graph,
    encode_graph6,
    format_edge_list,
    girth,
    is_connected,
    mask_of,
    parse_edge_list,
    parse_graph6,
    structure_report,
    vertices_of,
)
from .domination import (
    DominationNumbers,
    domination_numbers,
    enumerate_perfect_dominating_sets,
    is_dominating,
    is_perfect_dominating,
)
from .coalition import (
    Partition,
    PrcCertificate,
    Violation,
    ViolationKind,
    is_perfect_coalition,
    partner_count,
    satisfies_sparse_neighbor_condition,
    validate_prc_partition,
)
from .solver import (
    SearchStats,
    SolveResult,
    coalition_number_bruteforce,
    prc_bruteforce,
    prc_solve,
    verify_certificate,
)
from .families import (
    FamilyKind,
    FamilyMembership,
    FamilySpec,
    TClass,
    classify_T1_T2,
    construct_known_prc_partition,
    formula_prc_cycle,
    formula_prc_path,
    generate,
    is_in_family_B,
    parse_family_spec,
)
from .suites import SUITES, TheoremReport, run_suite

__version__ = "0.1.0"
