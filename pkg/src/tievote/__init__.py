"""Elections over votes with ties.

Weak-order ballots, four single-peakedness models, scoring-rule extensions,
Copeland(alpha), elimination veto, and constructive weighted coalitional
manipulation solvers with an exhaustive cross-checking oracle.
"""

from .core import (
    Candidate,
    OrderClass,
    Profile,
    WeakOrder,
    WeightedVoter,
    classify_order,
    order_from_string,
    parse_profile,
    serialize_profile,
)
from .elimination import EliminationOrder, elimination_veto_winner
from .errors import (
    CapacityError,
    NotApplicableError,
    ParseError,
    TieVoteError,
    ValidationError,
)
from .manipulation import (
    CwcmInstance,
    EliminationVetoRule,
    ManipulationResult,
    PartitionInstance,
    ScoringRule,
    check_score_gap_condition,
    normalize_p_first,
    reduce_partition_to_cwcm,
    solve_cwcm,
    solve_cwcm_copeland_sp,
    solve_cwcm_elimination_veto,
    solve_cwcm_oracle,
    solve_cwcm_scoring_sp,
    solve_partition,
    verify_manipulation_result,
)
from .pairwise import (
    CopelandRule,
    MajorityGraph,
    copeland_scores,
    copeland_winners,
    is_majority_transitive,
    weak_condorcet_winners,
    weighted_majority_graph,
)
from .peakedness import (
    Axis,
    PeakDecomposition,
    SPModel,
    enumerate_consistent_votes,
    find_axis,
    split_at,
    validate_profile,
    validate_vote,
    check_model_implication,
)
from .scoring import (
    Extension,
    ScoringVector,
    group_offsets,
    score_profile,
    score_vote,
    scoring_winners,
)

__all__ = [
    "Axis",
    "Candidate",
    "CapacityError",
    "CopelandRule",
    "CwcmInstance",
    "EliminationOrder",
    "EliminationVetoRule",
    "Extension",
    "MajorityGraph",
    "ManipulationResult",
    "NotApplicableError",
    "OrderClass",
    "ParseError",
    "PartitionInstance",
    "PeakDecomposition",
    "Profile",
    "SPModel",
    "ScoringRule",
    "ScoringVector",
    "TieVoteError",
    "ValidationError",
    "WeakOrder",
    "WeightedVoter",
    "check_model_implication",
    "check_score_gap_condition",
    "classify_order",
    "copeland_scores",
    "copeland_winners",
    "elimination_veto_winner",
    "enumerate_consistent_votes",
    "find_axis",
    "group_offsets",
    "is_majority_transitive",
    "normalize_p_first",
    "order_from_string",
    "parse_profile",
    "reduce_partition_to_cwcm",
    "score_profile",
    "score_vote",
    "scoring_winners",
    "serialize_profile",
    "solve_cwcm",
    "solve_cwcm_copeland_sp",
    "solve_cwcm_elimination_veto",
    "solve_cwcm_oracle",
    "solve_cwcm_scoring_sp",
    "solve_partition",
    "split_at",
    "validate_profile",
    "validate_vote",
    "verify_manipulation_result",
    "weak_condorcet_winners",
    "weighted_majority_graph",
]
