"""Tournament rankings under fairness axioms and backward-arc minimization."""

from .errors import (
    DomainMismatchError,
    DuplicateOrConflictError,
    EmptyClassError,
    FairrankError,
    LoopArcError,
    MissingPairError,
    NoConvergenceError,
    NotStronglyConnectedError,
    ResourceLimitError,
    TournamentSyntaxError,
    UnknownVertexError,
    VerificationFailedError,
    ZeroNormalizerError,
)
from .fixpoint import (
    LinearFairResult,
    PerronResult,
    RecalcConfig,
    iterate_to_fixed_point,
    linear_fair_ranking,
    metric_distance,
    perron_fixed_point,
    recalc_apply,
    uniform_ranking,
)
from .optimize import (
    EmnReport,
    EmnRow,
    MinBackwardResult,
    composite_fraction,
    copeland_bound,
    emn_sweep_composite,
    iter_weak_orders,
    min_backward_copeland_closed_form,
    min_backward_fair,
    min_backward_injective,
    reversal_bound_check,
    verify_copeland_upper_bound,
    weak_order_ranking,
)
from .ranking import (
    BackwardReport,
    FairnessClass,
    FairnessVerdict,
    Ranking,
    backward_arcs,
    copeland_ranking,
    is_fair,
    linear_sums,
    parse_ranking,
    serialize_ranking,
    spectral_leq,
    spectral_leq_bruteforce,
    spectral_strict_less,
)
from .tournament import (
    SccDecomposition,
    Tournament,
    build_tournament,
    enumerate_all,
    gen_composite,
    gen_random,
    gen_rotational,
    is_strongly_connected,
    parse_tournament,
    scc_decompose,
    serialize_tournament,
)

__version__ = "0.1.0"
