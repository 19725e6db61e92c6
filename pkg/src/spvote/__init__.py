"""Committee elections for electorates on a one-dimensional candidate axis.

Bloc and k-Copeland committees with exact integer tallying, committee
stability diagnostics (adjacency, pairwise dominance, Condorcet sets, local
stability under configurable quotas), three random electorate models, and a
reproducible simulation harness comparing the two election methods.
"""

from .elections import (
    BlocTally,
    NotSinglePeakedError,
    PairwiseMatrix,
    WinningSet,
    bloc_tally,
    bloc_winners,
    committee_monotonicity_violations,
    condorcet_winner,
    copeland_ranking,
    copeland_scores,
    k_copeland_winner,
    k_copeland_winners,
    median_elimination_ranking,
    pairwise_matrix,
    select_top_k,
)
from .generators import (
    BimodalDistribution,
    NormalDistribution,
    RandomSource,
    SpatialSpec,
    derive_stream,
    sample_iac_single_peaked,
    sample_spatial,
)
from .montecarlo import (
    ExperimentConfig,
    ExperimentResult,
    emit_report,
    run_experiment,
    stability_lower_bound_from_labels,
)
from .profiles import (
    Profile,
    ProfileError,
    Ranking,
    candidate_name,
    eliminate_candidate,
    enumerate_single_peaked_rankings,
    is_single_peaked,
    parse_profile,
    profile_from_counts,
    serialize_profile,
)
from .stability import (
    Quota,
    StabilityReport,
    block_size,
    classify,
    is_adjacent,
    is_condorcet_set,
    is_gehrlein_stable,
    is_locally_stable,
)

__version__ = "0.1.0"
