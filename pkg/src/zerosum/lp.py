"""Dense two-phase primal simplex with Bland's anti-cycling rule.

Solves  maximize c.z  subject to  G z <= h,  E z = f,  lb <= z <= ub,
where individual bounds may be -inf/+inf.  Strict inequalities cannot be
expressed here; callers reduce them by positive scaling (see spectral.gordan).

The implementation favors simplicity over speed: desk-scale instances only
(tens of variables and constraints), dense tableau, no factorization reuse.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import DimensionMismatchError, InputError

FEAS_TOL_DEFAULT = 1e-9
# Entries at or below this magnitude are treated as zero during pivoting.
PIVOT_TOL = 1e-11
# Iteration budget factor; Bland's rule terminates, so hitting the budget
# signals a solver bug rather than a hard instance.
ITERATION_FACTOR = 50


class IterationLimitError(RuntimeError):
    """Simplex exceeded 50*(variables+constraints) pivots; solver bug."""


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


def _as_matrix(M, n_cols: int, name: str) -> np.ndarray:
    if M is None:
        return np.zeros((0, n_cols))
    arr = np.array(M, dtype=float)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"{name} must be 2-D, got ndim={arr.ndim}")
    if arr.shape[1] != n_cols:
        raise DimensionMismatchError(
            f"{name} has {arr.shape[1]} columns, expected {n_cols}"
        )
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name} must have finite entries")
    return arr


def _as_vector(v, n: int, name: str, allow_inf: bool = False) -> np.ndarray:
    arr = np.array(v, dtype=float)
    if arr.ndim != 1 or arr.size != n:
        raise DimensionMismatchError(f"{name} must be a vector of length {n}")
    if np.any(np.isnan(arr)):
        raise InputError(f"{name} contains NaN")
    if not allow_inf and not np.all(np.isfinite(arr)):
        raise InputError(f"{name} must have finite entries")
    return arr


@dataclass(frozen=True)
class LinearProgram:
    """maximize objective.z  s.t.  ineq_lhs z <= ineq_rhs,  eq_lhs z = eq_rhs,
    lower_bounds <= z <= upper_bounds.

    Bounds default to z >= 0 (lower 0, upper +inf).  Use -inf lower bounds
    for free variables.
    """

    objective: np.ndarray
    ineq_lhs: np.ndarray | None = None
    ineq_rhs: np.ndarray | None = None
    eq_lhs: np.ndarray | None = None
    eq_rhs: np.ndarray | None = None
    lower_bounds: np.ndarray | None = None
    upper_bounds: np.ndarray | None = None

    def __post_init__(self) -> None:
        c = _as_vector(self.objective, np.asarray(self.objective).size, "objective")
        if c.size == 0:
            raise InputError("objective must be nonempty")
        n = c.size
        G = _as_matrix(self.ineq_lhs, n, "ineq_lhs")
        E = _as_matrix(self.eq_lhs, n, "eq_lhs")
        if (self.ineq_rhs is None) != (self.ineq_lhs is None):
            raise DimensionMismatchError("ineq_lhs and ineq_rhs must be given together")
        if (self.eq_rhs is None) != (self.eq_lhs is None):
            raise DimensionMismatchError("eq_lhs and eq_rhs must be given together")
        h = (
            _as_vector(self.ineq_rhs, G.shape[0], "ineq_rhs")
            if self.ineq_rhs is not None
            else np.zeros(0)
        )
        f = (
            _as_vector(self.eq_rhs, E.shape[0], "eq_rhs")
            if self.eq_rhs is not None
            else np.zeros(0)
        )
        lb = (
            _as_vector(self.lower_bounds, n, "lower_bounds", allow_inf=True)
            if self.lower_bounds is not None
            else np.zeros(n)
        )
        ub = (
            _as_vector(self.upper_bounds, n, "upper_bounds", allow_inf=True)
            if self.upper_bounds is not None
            else np.full(n, np.inf)
        )
        if np.any(lb > ub):
            raise InputError("lower bound exceeds upper bound")
        for name, val in (
            ("objective", c),
            ("ineq_lhs", G),
            ("ineq_rhs", h),
            ("eq_lhs", E),
            ("eq_rhs", f),
            ("lower_bounds", lb),
            ("upper_bounds", ub),
        ):
            val.setflags(write=False)
            object.__setattr__(self, name, val)

    @property
    def n_vars(self) -> int:
        return self.objective.size


@dataclass(frozen=True)
class LPSolution:
    status: LPStatus
    point: np.ndarray | None = None
    objective_value: float | None = None
    primal_residual: float = 0.0


def _pivot(T: np.ndarray, row: int, col: int) -> None:
    T[row] /= T[row, col]
    factors = T[:, col].copy()
    factors[row] = 0.0
    T -= np.outer(factors, T[row])
    # Kill roundoff dust so the basic column is an exact unit vector and the
    # ratio test never sees a slightly negative rhs.
    T[:, col] = 0.0
    T[row, col] = 1.0
    rhs = T[:-1, -1]
    rhs[(rhs < 0.0) & (rhs > -PIVOT_TOL)] = 0.0


def _run_simplex(T: np.ndarray, basis: list[int], iter_limit: int) -> str:
    """Pivot to optimality ('optimal') or detect an improving ray ('unbounded').

    Last tableau row holds reduced costs for maximization plus -objective in
    the rhs slot.  Bland's rule: entering = smallest improving column index,
    leaving = minimum ratio with ties broken by smallest basic variable.
    """
    for _ in range(iter_limit):
        reduced = T[-1, :-1]
        improving = np.nonzero(reduced > PIVOT_TOL)[0]
        if improving.size == 0:
            return "optimal"
        enter = int(improving[0])
        col = T[:-1, enter]
        rows = np.nonzero(col > PIVOT_TOL)[0]
        if rows.size == 0:
            return "unbounded"
        ratios = T[rows, -1] / col[rows]
        best = ratios.min()
        ties = rows[ratios == best]
        leave = int(ties[np.argmin([basis[i] for i in ties])])
        _pivot(T, leave, enter)
        basis[leave] = enter
    raise IterationLimitError(
        f"simplex did not finish within {iter_limit} pivots; "
        "this signals a bug since Bland's rule terminates"
    )


def _priced_cost_row(T: np.ndarray, basis: list[int], costs: np.ndarray) -> np.ndarray:
    """Reduced-cost row (with -objective in the rhs slot) for the given basis."""
    row = np.append(costs, 0.0)
    for r, b in enumerate(basis):
        if costs[b] != 0.0:
            row -= costs[b] * T[r]
    return row


@dataclass
class _StandardForm:
    """Nonnegative-variable rewrite of a LinearProgram."""

    matrix: np.ndarray  # stacked [ineq; eq] rows over standard variables
    rhs: np.ndarray
    n_ineq: int
    costs: np.ndarray
    selection: np.ndarray  # z = offsets + selection @ u
    offsets: np.ndarray


def _standardize(p: LinearProgram) -> _StandardForm:
    n = p.n_vars
    lb, ub = p.lower_bounds, p.upper_bounds
    columns: list[tuple[int, float]] = []  # (original var, sign)
    offsets = np.zeros(n)
    bound_rows: list[tuple[int, float]] = []  # (standard col, cap)
    for i in range(n):
        lo, hi = lb[i], ub[i]
        if np.isfinite(lo):
            offsets[i] = lo
            if np.isfinite(hi):
                bound_rows.append((len(columns), hi - lo))
            columns.append((i, 1.0))
        elif np.isfinite(hi):
            offsets[i] = hi
            columns.append((i, -1.0))
        else:
            columns.append((i, 1.0))
            columns.append((i, -1.0))
    N = len(columns)
    S = np.zeros((n, N))
    for k, (i, sign) in enumerate(columns):
        S[i, k] = sign

    G = p.ineq_lhs @ S
    h = p.ineq_rhs - p.ineq_lhs @ offsets
    if bound_rows:
        extra = np.zeros((len(bound_rows), N))
        caps = np.zeros(len(bound_rows))
        for r, (k, cap) in enumerate(bound_rows):
            extra[r, k] = 1.0
            caps[r] = cap
        G = np.vstack([G, extra])
        h = np.concatenate([h, caps])
    E = p.eq_lhs @ S
    f = p.eq_rhs - p.eq_lhs @ offsets

    return _StandardForm(
        matrix=np.vstack([G, E]),
        rhs=np.concatenate([h, f]),
        n_ineq=G.shape[0],
        costs=p.objective @ S,
        selection=S,
        offsets=offsets,
    )


def _residual(p: LinearProgram, z: np.ndarray) -> float:
    parts = [0.0]
    if p.ineq_lhs.shape[0]:
        parts.append(float(np.max(p.ineq_lhs @ z - p.ineq_rhs)))
    if p.eq_lhs.shape[0]:
        parts.append(float(np.max(np.abs(p.eq_lhs @ z - p.eq_rhs))))
    finite_lo = np.isfinite(p.lower_bounds)
    finite_hi = np.isfinite(p.upper_bounds)
    if np.any(finite_lo):
        parts.append(float(np.max(p.lower_bounds[finite_lo] - z[finite_lo])))
    if np.any(finite_hi):
        parts.append(float(np.max(z[finite_hi] - p.upper_bounds[finite_hi])))
    return max(parts)


def solve_lp(p: LinearProgram, feas_tol: float = FEAS_TOL_DEFAULT) -> LPSolution:
    """Two-phase simplex.  Returns Optimal with a feasible point, Infeasible
    when the phase-1 optimum exceeds feas_tol, or Unbounded when an improving
    ray is certified.
    """
    if feas_tol <= 0.0:
        raise InputError("feas_tol must be positive")
    std = _standardize(p)
    m, N = std.matrix.shape

    M = std.matrix.copy()
    b = std.rhs.copy()
    flipped = b < 0.0
    M[flipped] *= -1.0
    b[flipped] *= -1.0

    # Slack columns for inequality rows; +1 slack on an unflipped row can
    # serve as the initial basis, everything else takes an artificial.
    n_ineq = std.n_ineq
    slack = np.zeros((m, n_ineq))
    for i in range(n_ineq):
        slack[i, i] = -1.0 if flipped[i] else 1.0
    body = np.hstack([M, slack])

    basis: list[int] = []
    art_rows = []
    for i in range(m):
        if i < n_ineq and not flipped[i]:
            basis.append(N + i)
        else:
            art_rows.append(i)
            basis.append(-1)  # placeholder, filled below
    n_art = len(art_rows)
    art = np.zeros((m, n_art))
    for k, i in enumerate(art_rows):
        art[i, k] = 1.0
        basis[i] = N + n_ineq + k
    total = N + n_ineq + n_art

    T = np.zeros((m + 1, total + 1))
    T[:m, : N + n_ineq] = body
    T[:m, N + n_ineq : total] = art
    T[:m, -1] = b

    iter_limit = ITERATION_FACTOR * (total + m)

    # Phase 1: maximize -(sum of artificials).
    phase1_costs = np.zeros(total)
    phase1_costs[N + n_ineq :] = -1.0
    T[-1] = _priced_cost_row(T, basis, phase1_costs)
    outcome = _run_simplex(T, basis, iter_limit)
    if outcome != "optimal":
        raise RuntimeError("phase-1 objective is bounded; unbounded signals a bug")
    art_sum = T[-1, -1]  # -objective = sum of artificials
    if art_sum > feas_tol:
        return LPSolution(status=LPStatus.INFEASIBLE)

    # Drive leftover artificials out of the basis; rows where that is
    # impossible are redundant and dropped.  A lingering artificial sits at a
    # value <= feas_tol, which we are entitled to round to zero, keeping the
    # rhs nonnegative through the degenerate pivot.
    keep = np.ones(m, dtype=bool)
    for r in range(m):
        if basis[r] >= N + n_ineq:
            T[r, -1] = 0.0
            row_body = np.abs(T[r, : N + n_ineq])
            col = int(np.argmax(row_body))
            if row_body[col] > PIVOT_TOL:
                _pivot(T, r, col)
                basis[r] = col
            else:
                keep[r] = False
    if not np.all(keep):
        T = np.vstack([T[:-1][keep], T[-1]])
        basis = [bvar for r, bvar in enumerate(basis) if keep[r]]
    T = np.delete(T, np.s_[N + n_ineq : total], axis=1)

    # Phase 2 with the real objective.
    phase2_costs = np.zeros(N + n_ineq)
    phase2_costs[:N] = std.costs
    T[-1] = _priced_cost_row(T, basis, phase2_costs)
    outcome = _run_simplex(T, basis, iter_limit)
    if outcome == "unbounded":
        return LPSolution(status=LPStatus.UNBOUNDED)

    u = np.zeros(N + n_ineq)
    for r, bvar in enumerate(basis):
        u[bvar] = T[r, -1]
    z = std.offsets + std.selection @ u[:N]
    residual = _residual(p, z)
    if residual > feas_tol:
        raise RuntimeError(
            f"optimal point violates feasibility by {residual:g} > {feas_tol:g}; "
            "solver bug"
        )
    return LPSolution(
        status=LPStatus.OPTIMAL,
        point=z,
        objective_value=float(p.objective @ z),
        primal_residual=residual,
    )
