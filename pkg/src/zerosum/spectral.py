"""Eigen-structure computations tied to games: Perron root/vector of a
positive matrix, null spaces, stochastic vectors inside eigenspaces, and
Gordan's theorem of alternatives.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import (
    GameMatrix,
    InputError,
    InvalidMatrixError,
    MixedStrategy,
    Player,
    validate_strategy,
)
from .lp import FEAS_TOL_DEFAULT, LinearProgram, LPStatus, solve_lp

PERRON_RESIDUAL_TOL = 1e-10
PERRON_STEP_TOL = 1e-14
PERRON_MAX_ITER = 100_000
RANK_TOL_DEFAULT = 1e-9
GORDAN_WITNESS_TOL = 1e-9
# Absolute slack on the row-sum bracket: the bracket is an exact statement
# about the true root, and the estimate differs from it by mere roundoff.
BRACKET_ROUNDOFF = 1e-12


class ConvergenceError(RuntimeError):
    """Power iteration failed to certify a Perron pair; pathological input."""


class InconsistentAlternativesError(RuntimeError):
    """Both or neither Gordan branch came back feasible; tolerances are off."""


@dataclass(frozen=True)
class SpectralCert:
    """Certified Perron pair: positive root, positive stochastic vector, and
    the infinity-norm residual of A v - root v."""

    perron_root: float
    perron_vector: np.ndarray
    residual: float
    iterations: int


@dataclass(frozen=True)
class KernelBasis:
    """Basis (unit infinity-norm vectors) of the null space of a matrix."""

    dimension: int
    basis_vectors: tuple[np.ndarray, ...]


class GordanBranch(enum.Enum):
    NONNEGATIVE_KERNEL = "NonnegativeKernel"
    POSITIVE_IMAGE = "PositiveImage"


@dataclass(frozen=True)
class GordanVerdict:
    branch: GordanBranch
    witness: np.ndarray


def perron(A: GameMatrix, tol: float = PERRON_RESIDUAL_TOL) -> SpectralCert:
    """Dominant eigenpair of a strictly positive square matrix.

    Power iteration from the uniform vector with L1 renormalization; stops
    once successive iterates agree to 1e-14 in infinity norm.  The root is
    the component-sum ratio sum(A v)/sum(v), which is robust when individual
    components are small.  Raises ConvergenceError rather than returning a
    certificate whose residual exceeds `tol`.
    """
    if not A.is_square:
        raise InvalidMatrixError(f"perron requires a square matrix, got {A.rows}x{A.cols}")
    V = A.values
    if V.min() <= 0.0:
        raise InputError("perron requires strictly positive entries")
    n = A.rows
    v = np.full(n, 1.0 / n)
    iterations = 0
    converged = False
    for _ in range(PERRON_MAX_ITER):
        w = V @ v
        w /= w.sum()
        iterations += 1
        if np.max(np.abs(w - v)) < PERRON_STEP_TOL:
            v = w
            converged = True
            break
        v = w
    Av = V @ v
    root = float(Av.sum() / v.sum())
    residual = float(np.max(np.abs(Av - root * v)))
    if not converged or residual > tol:
        raise ConvergenceError(
            f"power iteration residual {residual:g} after {iterations} steps "
            f"(tol {tol:g}); matrix is pathologically conditioned"
        )
    row_sums = V.sum(axis=1)
    if not (row_sums.min() - BRACKET_ROUNDOFF <= root <= row_sums.max() + BRACKET_ROUNDOFF):
        raise ConvergenceError(
            f"estimated root {root!r} escapes the row-sum bracket "
            f"[{row_sums.min()!r}, {row_sums.max()!r}]"
        )
    vec = v / v.sum()
    vec.setflags(write=False)
    return SpectralCert(
        perron_root=root, perron_vector=vec, residual=residual, iterations=iterations
    )


def matrix_rank(values: np.ndarray, rank_tol: float = RANK_TOL_DEFAULT) -> int:
    """Rank by Gaussian elimination with partial pivoting; pivots at or below
    rank_tol * max|A| count as zero."""
    return len(_row_reduce(values, rank_tol)[1])


def _row_reduce(values: np.ndarray, rank_tol: float) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns under the rank tolerance."""
    R = np.array(values, dtype=float)
    m, n = R.shape
    threshold = rank_tol * float(np.abs(R).max()) if R.size else 0.0
    pivots: list[int] = []
    r = 0
    for col in range(n):
        if r >= m:
            break
        lead = r + int(np.argmax(np.abs(R[r:, col])))
        if np.abs(R[lead, col]) <= threshold:
            R[r:, col] = 0.0
            continue
        R[[r, lead]] = R[[lead, r]]
        R[r] /= R[r, col]
        others = np.abs(R[:, col]) > 0.0
        others[r] = False
        R[others] -= np.outer(R[others, col], R[r])
        R[:, col] = 0.0
        R[r, col] = 1.0
        pivots.append(col)
        r += 1
    return R, pivots


def null_space(A: GameMatrix, rank_tol: float = RANK_TOL_DEFAULT) -> KernelBasis:
    """Kernel basis of a square matrix via Gauss-Jordan elimination.

    Free columns of the reduced echelon form each contribute one basis
    vector, normalized to unit infinity norm.
    """
    if not A.is_square:
        raise InvalidMatrixError(
            f"null_space requires a square matrix, got {A.rows}x{A.cols}"
        )
    R, pivots = _row_reduce(A.values, rank_tol)
    n = A.cols
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        vec = np.zeros(n)
        vec[f] = 1.0
        for r, p in enumerate(pivots):
            vec[p] = -R[r, f]
        vec /= np.max(np.abs(vec))
        vec.setflags(write=False)
        basis.append(vec)
    return KernelBasis(dimension=len(free), basis_vectors=tuple(basis))


def stochastic_eigenvector(
    A: GameMatrix,
    eigenvalue: float,
    player: Player = Player.COL,
    feas_tol: float = FEAS_TOL_DEFAULT,
) -> MixedStrategy | None:
    """A stochastic vector y with (A - eigenvalue*I) y = 0, or None.

    Decided by LP feasibility: (A - lambda I) y = 0, sum y = 1, y >= 0.  No
    eigenvalue search is performed; the caller supplies lambda.
    """
    if not A.is_square:
        raise InvalidMatrixError(
            f"stochastic_eigenvector requires a square matrix, got {A.rows}x{A.cols}"
        )
    n = A.rows
    E = np.vstack([A.values - eigenvalue * np.eye(n), np.ones((1, n))])
    f = np.zeros(n + 1)
    f[n] = 1.0
    sol = solve_lp(
        LinearProgram(objective=np.zeros(n), eq_lhs=E, eq_rhs=f), feas_tol=feas_tol
    )
    if sol.status is not LPStatus.OPTIMAL:
        return None
    return validate_strategy(np.clip(sol.point, 0.0, None), player)


def gordan(A: GameMatrix, feas_tol: float = FEAS_TOL_DEFAULT) -> GordanVerdict:
    """Decide which Gordan alternative holds for A and return its witness.

    Branch 1: A x = 0 has a nonzero nonnegative solution (normalized to a
    stochastic x).  Branch 2: A^T y > 0 has a solution; the strict system is
    reduced by positive scaling to A^T y >= 1 with y free.  Exactly one
    branch is feasible; anything else raises InconsistentAlternativesError.
    """
    V = A.values
    m, n = V.shape

    E = np.vstack([V, np.ones((1, n))])
    f = np.zeros(m + 1)
    f[m] = 1.0
    kernel = solve_lp(
        LinearProgram(objective=np.zeros(n), eq_lhs=E, eq_rhs=f), feas_tol=feas_tol
    )

    image = solve_lp(
        LinearProgram(
            objective=np.zeros(m),
            ineq_lhs=-V.T,
            ineq_rhs=-np.ones(n),
            lower_bounds=np.full(m, -np.inf),
        ),
        feas_tol=feas_tol,
    )

    kernel_ok = kernel.status is LPStatus.OPTIMAL
    image_ok = image.status is LPStatus.OPTIMAL
    if kernel_ok == image_ok:
        raise InconsistentAlternativesError(
            f"kernel branch {kernel.status.value}, image branch {image.status.value}; "
            "exactly one must be feasible"
        )
    if kernel_ok:
        x = np.clip(kernel.point, 0.0, None)
        x /= x.sum()
        if float(np.max(np.abs(V @ x))) > GORDAN_WITNESS_TOL:
            raise InconsistentAlternativesError(
                "kernel witness fails ||A x||_inf <= 1e-9 after cleanup"
            )
        x.setflags(write=False)
        return GordanVerdict(branch=GordanBranch.NONNEGATIVE_KERNEL, witness=x)
    y = image.point.copy()
    if float((V.T @ y).min()) < 1.0 - GORDAN_WITNESS_TOL:
        raise InconsistentAlternativesError(
            "image witness fails A^T y >= 1 - 1e-9"
        )
    y.setflags(write=False)
    return GordanVerdict(branch=GordanBranch.POSITIVE_IMAGE, witness=y)
