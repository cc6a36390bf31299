"""Zero-sum matrix games: value/strategy solving, the spectral objects they
relate to, and per-claim empirical audits over matrix ensembles."""

from .core import (
    DimensionMismatchError,
    GameMatrix,
    GameSolution,
    InputError,
    InvalidMatrixError,
    InvalidStrategyError,
    MixedStrategy,
    Player,
    payoff,
    pure_strategy,
    uniform_strategy,
    validate_strategy,
)
from .lp import (
    IterationLimitError,
    LinearProgram,
    LPSolution,
    LPStatus,
    solve_lp,
)
from .solver import (
    OracleSizeError,
    OracleSolution,
    all_row_optima_dominated,
    is_optimal_dominated,
    oracle_solve,
    row_optima_column_extrema,
    solve_game,
)
from .spectral import (
    ConvergenceError,
    GordanBranch,
    GordanVerdict,
    InconsistentAlternativesError,
    KernelBasis,
    SpectralCert,
    gordan,
    matrix_rank,
    null_space,
    perron,
    stochastic_eigenvector,
)
from .claims import (
    ClaimId,
    ClaimReport,
    Verdict,
    check_diagonal,
    check_eigenspace_lemma5,
    check_gordan_theorem3,
    check_neg_transpose,
    check_positive_dominated,
    check_shared_optima,
    check_shifted_eigen,
    check_skew,
    run_checker,
)
from .cli import (
    EnsembleSpec,
    Family,
    MatrixParseError,
    generate_ensemble,
    parse_matrix,
    render_matrix,
    run_cli,
)

__version__ = "0.1.0"

__all__ = [
    "GameMatrix",
    "MixedStrategy",
    "Player",
    "GameSolution",
    "payoff",
    "validate_strategy",
    "uniform_strategy",
    "pure_strategy",
    "InputError",
    "DimensionMismatchError",
    "InvalidMatrixError",
    "InvalidStrategyError",
    "LinearProgram",
    "LPSolution",
    "LPStatus",
    "solve_lp",
    "IterationLimitError",
    "solve_game",
    "oracle_solve",
    "OracleSolution",
    "OracleSizeError",
    "is_optimal_dominated",
    "all_row_optima_dominated",
    "row_optima_column_extrema",
    "perron",
    "null_space",
    "matrix_rank",
    "stochastic_eigenvector",
    "gordan",
    "SpectralCert",
    "KernelBasis",
    "GordanBranch",
    "GordanVerdict",
    "ConvergenceError",
    "InconsistentAlternativesError",
    "ClaimId",
    "ClaimReport",
    "Verdict",
    "check_diagonal",
    "check_skew",
    "check_shared_optima",
    "check_neg_transpose",
    "check_eigenspace_lemma5",
    "check_gordan_theorem3",
    "check_positive_dominated",
    "check_shifted_eigen",
    "run_checker",
    "EnsembleSpec",
    "Family",
    "generate_ensemble",
    "parse_matrix",
    "render_matrix",
    "MatrixParseError",
    "run_cli",
]
