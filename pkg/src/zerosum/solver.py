"""Game value and optimal strategies via linear programming, plus an
independent support-enumeration oracle for small games and the
optimal-dominated decision procedures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import (
    GameMatrix,
    GameSolution,
    InputError,
    MixedStrategy,
    Player,
    validate_strategy,
)
from .lp import FEAS_TOL_DEFAULT, LinearProgram, LPStatus, solve_lp

SOLVE_TOL_DEFAULT = 1e-8
# No pure deviation may improve a player by more than this at an accepted
# oracle candidate.
ORACLE_DEVIATION_TOL = 1e-8
ORACLE_NONNEG_TOL = 1e-9
ORACLE_MAX_SIZE = 5


class OracleSizeError(InputError):
    """Support enumeration is only allowed up to 5x5."""


@dataclass(frozen=True)
class OracleSolution:
    """Equilibrium found by exhaustive support enumeration."""

    value: float
    row_support: tuple[int, ...]
    col_support: tuple[int, ...]
    row_strategy: MixedStrategy
    col_strategy: MixedStrategy


def _positivity_shift(values: np.ndarray) -> float:
    """Constant c making every entry of A + cJ at least 1 (0 if already)."""
    lo = float(values.min())
    return 1.0 - lo if lo < 1.0 else 0.0


def _value_lp(B: np.ndarray, feas_tol: float) -> tuple[np.ndarray, float]:
    """Row player's value LP on B: maximize v s.t. B^T x >= v 1, sum x = 1,
    x >= 0, v free.  Returns (x, v)."""
    m, n = B.shape
    c = np.zeros(m + 1)
    c[m] = 1.0
    G = np.hstack([-B.T, np.ones((n, 1))])  # v - (B^T x)_j <= 0
    h = np.zeros(n)
    E = np.zeros((1, m + 1))
    E[0, :m] = 1.0
    f = np.ones(1)
    lb = np.zeros(m + 1)
    lb[m] = -np.inf
    sol = solve_lp(
        LinearProgram(
            objective=c, ineq_lhs=G, ineq_rhs=h, eq_lhs=E, eq_rhs=f, lower_bounds=lb
        ),
        feas_tol=feas_tol,
    )
    if sol.status is not LPStatus.OPTIMAL:
        raise RuntimeError(
            f"value LP reported {sol.status.value}; impossible for a valid game"
        )
    return sol.point[:m], float(sol.point[m])


def solve_game(
    A: GameMatrix, tol: float = SOLVE_TOL_DEFAULT, feas_tol: float = FEAS_TOL_DEFAULT
) -> GameSolution:
    """Value and one optimal strategy pair for the matrix game A.

    The matrix is shifted by c = 1 - min entry so the shifted value is
    positive, the row player's value LP and the column player's symmetric LP
    are solved independently, and the value is un-shifted.  The returned
    solution satisfies the GameSolution floor/ceiling invariants at `tol`.

    All tolerances are absolute and sized for desk-scale payoffs.  For
    entries far beyond ~1e4 in magnitude, normalize first: solve A / max|A|
    and multiply the value back (strategies are unchanged; the game value is
    exactly scale-covariant).  Feeding huge payoffs directly makes the
    certificate checks refuse rather than return degraded certificates.
    """
    if tol <= 0.0:
        raise InputError("tol must be positive")
    V = A.values
    shift = _positivity_shift(V)
    B = V + shift

    x, v_row = _value_lp(B, feas_tol)
    # Column player: v(B) = -v(-B^T), so the symmetric LP on -B^T yields y.
    y, w_neg = _value_lp(-B.T, feas_tol)

    value = v_row - shift
    row = validate_strategy(x, Player.ROW)
    col = validate_strategy(y, Player.COL)

    floor = float((row.weights @ V).min())
    ceiling = float((V @ col.weights).max())
    gap = max(ceiling - floor, 0.0)
    if floor < value - tol or ceiling > value + tol or gap > tol:
        raise RuntimeError(
            f"game solution violates its certificates: floor={floor!r} "
            f"ceiling={ceiling!r} value={value!r} tol={tol:g}"
        )
    return GameSolution(
        value=value,
        row_strategy=row,
        col_strategy=col,
        duality_gap=gap,
        tolerance=tol,
    )


def _equalizing_weights(sub: np.ndarray) -> tuple[np.ndarray, float] | None:
    """Weights making every column of `sub` pay the same amount.

    Solves  sub^T w = v 1,  sum w = 1  for (w, v); returns None when the
    bordered system is singular or too ill-conditioned to trust.
    """
    k = sub.shape[0]
    M = np.zeros((k + 1, k + 1))
    M[:k, :k] = sub.T
    M[:k, k] = -1.0
    M[k, :k] = 1.0
    rhs = np.zeros(k + 1)
    rhs[k] = 1.0
    try:
        sol = np.linalg.solve(M, rhs)
    except np.linalg.LinAlgError:
        return None
    scale = max(1.0, float(np.abs(M).max()))
    if np.max(np.abs(M @ sol - rhs)) > 1e-9 * scale:
        return None
    return sol[:k], float(sol[k])


def oracle_solve(A: GameMatrix) -> OracleSolution:
    """Brute-force equilibrium by enumerating equal-size support pairs.

    Pairs are visited ordered by support size, then lexicographically; the
    first candidate with nonnegative weights and no improving pure deviation
    (beyond 1e-8) wins, which makes the result deterministic.  The minimax
    theorem guarantees such a pair exists, so exhausting the enumeration
    indicates a bug.
    """
    m, n = A.rows, A.cols
    if m > ORACLE_MAX_SIZE or n > ORACLE_MAX_SIZE:
        raise OracleSizeError(
            f"oracle_solve is limited to {ORACLE_MAX_SIZE}x{ORACLE_MAX_SIZE}, "
            f"got {m}x{n}"
        )
    shift = _positivity_shift(A.values)
    B = A.values + shift

    for k in range(1, min(m, n) + 1):
        for I in itertools.combinations(range(m), k):
            for J in itertools.combinations(range(n), k):
                sub = B[np.ix_(I, J)]
                row_sol = _equalizing_weights(sub)
                col_sol = _equalizing_weights(sub.T)
                if row_sol is None or col_sol is None:
                    continue
                x_sub, v = row_sol
                y_sub, w = col_sol
                if (
                    x_sub.min() < -ORACLE_NONNEG_TOL
                    or y_sub.min() < -ORACLE_NONNEG_TOL
                    or abs(v - w) > ORACLE_DEVIATION_TOL
                ):
                    continue
                x = np.zeros(m)
                x[list(I)] = np.clip(x_sub, 0.0, None)
                y = np.zeros(n)
                y[list(J)] = np.clip(y_sub, 0.0, None)
                x /= x.sum()
                y /= y.sum()
                floor = float((x @ B).min())
                ceiling = float((B @ y).max())
                if floor < v - ORACLE_DEVIATION_TOL:
                    continue
                if ceiling > v + ORACLE_DEVIATION_TOL:
                    continue
                return OracleSolution(
                    value=v - shift,
                    row_support=I,
                    col_support=J,
                    row_strategy=MixedStrategy(Player.ROW, x),
                    col_strategy=MixedStrategy(Player.COL, y),
                )
    raise RuntimeError("no valid support pair found; oracle bug")


def is_optimal_dominated(
    A: GameMatrix, s: MixedStrategy, v: float, tol: float
) -> bool:
    """Whether s achieves exactly v against every opposing pure strategy.

    Row side: max_j |(s^T A)_j - v| <= tol; column side: max_i |(A s)_i - v|
    <= tol.
    """
    if s.player is Player.ROW:
        if len(s) != A.rows:
            raise InputError(
                f"row strategy length {len(s)} does not match {A.rows} rows"
            )
        against = s.weights @ A.values
    else:
        if len(s) != A.cols:
            raise InputError(
                f"column strategy length {len(s)} does not match {A.cols} columns"
            )
        against = A.values @ s.weights
    return float(np.max(np.abs(against - v))) <= tol


def row_optima_column_extrema(
    A: GameMatrix, v: float, tol: float, feas_tol: float = FEAS_TOL_DEFAULT
) -> tuple[np.ndarray, np.ndarray]:
    """Per-column extremes of (x^T A)_j over the row player's optimal set.

    The optimal set is modeled as {x stochastic : (x^T A)_k >= v - tol for
    all k}; for each column the payoff is minimized and maximized by LP.
    """
    V = A.values
    m, n = V.shape
    G = -V.T
    h = np.full(n, -(v - tol))
    E = np.ones((1, m))
    f = np.ones(1)
    mins = np.empty(n)
    maxs = np.empty(n)
    for j in range(n):
        for sign, out in ((1.0, maxs), (-1.0, mins)):
            sol = solve_lp(
                LinearProgram(
                    objective=sign * V[:, j],
                    ineq_lhs=G,
                    ineq_rhs=h,
                    eq_lhs=E,
                    eq_rhs=f,
                ),
                feas_tol=feas_tol,
            )
            if sol.status is not LPStatus.OPTIMAL:
                raise RuntimeError(
                    f"optimal-set LP reported {sol.status.value}; the optimal "
                    "strategy polytope cannot be empty at the game value"
                )
            out[j] = sign * sol.objective_value
    return mins, maxs


def all_row_optima_dominated(
    A: GameMatrix, v: float, tol: float, feas_tol: float = FEAS_TOL_DEFAULT
) -> bool:
    """Whether every optimal row strategy is optimal-dominated.

    True iff for each column the extreme payoffs over the optimal-strategy
    polytope stay within tol of v, so no optimal strategy can pay anything
    other than v against any column.  The comparison allows feas_tol of LP
    arithmetic slack on top of tol: the polytope boundary itself sits at
    v - tol, so extrema legitimately touch v +/- tol exactly.
    """
    mins, maxs = row_optima_column_extrema(A, v, tol, feas_tol)
    slack = tol + feas_tol
    return bool(np.all(maxs <= v + slack) and np.all(mins >= v - slack))
