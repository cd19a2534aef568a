"""Constrained alignment of a pair of graphs via conflict graphs."""

from .conflict import (
    C4,
    ConflictGraph,
    ConflictType,
    build_conflict_graph,
    classify_conflict,
    conflicts,
    enumerate_c4s,
    underlying_graph,
)
from .errors import (
    BudgetExceeded,
    ContractViolation,
    OracleLimitExceeded,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    StructuralViolation,
)
from .generate import GenParams, SplitMix64, corpus, generate
from .model import (
    Alignment,
    AlignmentInstance,
    SideGraph,
    format_instance,
    instance_stats,
    parse_alignment,
    parse_instance,
    serialize_alignment,
)
from .oracle import OracleLimit, brute_force_best, count_conserved, make_alignment
from .solvers import (
    SolveResult,
    alignment_from_is,
    bounded_search_fpt,
    chain_approx,
    exact_mis,
    greedy_clawfree,
    kfree_fpt,
    ramsey_clique_removal,
)
from .structure import (
    StructureReport,
    check_all,
    degree_bound,
    find_claw,
    find_hole,
    find_induced_fan,
    find_induced_wheel,
    is_weakly_triangulated,
    max_clique,
)

__version__ = "0.1.0"
