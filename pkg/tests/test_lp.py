import numpy as np
import pytest

from zerosum import (
    DimensionMismatchError,
    InputError,
    LinearProgram,
    LPStatus,
    solve_lp,
)

FEAS_TOL = 1e-9


class TestBasicOutcomes:
    def test_box_optimum(self):
        p = LinearProgram(objective=[1, 1], ineq_lhs=[[1, 0], [0, 1]], ineq_rhs=[1, 1])
        sol = solve_lp(p)
        assert sol.status is LPStatus.OPTIMAL
        assert abs(sol.objective_value - 2.0) <= 1e-9
        np.testing.assert_allclose(sol.point, [1.0, 1.0], atol=1e-9)

    def test_infeasible(self):
        p = LinearProgram(objective=[1], ineq_lhs=[[1]], ineq_rhs=[-1])
        assert solve_lp(p).status is LPStatus.INFEASIBLE

    def test_unbounded(self):
        p = LinearProgram(objective=[1])
        assert solve_lp(p).status is LPStatus.UNBOUNDED

    def test_free_variable(self):
        p = LinearProgram(
            objective=[-1],
            ineq_lhs=[[-1]],
            ineq_rhs=[-3],
            lower_bounds=[-np.inf],
        )
        sol = solve_lp(p)
        assert sol.status is LPStatus.OPTIMAL
        assert abs(sol.point[0] - 3.0) <= 1e-9

    def test_negative_box(self):
        p = LinearProgram(
            objective=[1],
            lower_bounds=[-np.inf],
            upper_bounds=[-2.5],
        )
        sol = solve_lp(p)
        assert sol.status is LPStatus.OPTIMAL
        assert abs(sol.point[0] + 2.5) <= 1e-9

    def test_equality_with_bounds(self):
        p = LinearProgram(
            objective=[1, 2],
            eq_lhs=[[1, 1]],
            eq_rhs=[1],
            upper_bounds=[0.7, 0.7],
        )
        sol = solve_lp(p)
        assert abs(sol.objective_value - 1.7) <= 1e-9

    def test_beale_cycling_terminates(self):
        # Classic instance on which Dantzig's rule cycles; Bland must not.
        p = LinearProgram(
            objective=[0.75, -150, 0.02, -6],
            ineq_lhs=[
                [0.25, -60, -1 / 25, 9],
                [0.5, -90, -1 / 50, 3],
                [0, 0, 1, 0],
            ],
            ineq_rhs=[0, 0, 1],
        )
        sol = solve_lp(p)
        assert sol.status is LPStatus.OPTIMAL
        assert abs(sol.objective_value - 0.05) <= 1e-9


class TestValidation:
    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            LinearProgram(objective=[1, 2], ineq_lhs=[[1]], ineq_rhs=[0])

    def test_missing_rhs(self):
        with pytest.raises(DimensionMismatchError):
            LinearProgram(objective=[1], ineq_lhs=[[1]])

    def test_bad_bounds(self):
        with pytest.raises(InputError):
            LinearProgram(objective=[1], lower_bounds=[2.0], upper_bounds=[1.0])

    def test_nan_rejected(self):
        with pytest.raises(InputError):
            LinearProgram(objective=[float("nan")])

    def test_bad_feas_tol(self):
        with pytest.raises(InputError):
            solve_lp(LinearProgram(objective=[1]), feas_tol=0.0)


def _random_feasible_program(rng):
    """LP with a known interior point z0 inside the box [0, 2]^n."""
    n = int(rng.integers(1, 5))
    mg = int(rng.integers(0, 5))
    me = int(rng.integers(0, 2))
    z0 = rng.uniform(0.2, 1.0, n)
    G = rng.uniform(-2, 2, (mg, n))
    h = G @ z0 + rng.uniform(0.05, 1.0, mg)
    E = rng.uniform(-2, 2, (me, n))
    f = E @ z0
    c = rng.uniform(-2, 2, n)
    p = LinearProgram(
        objective=c,
        ineq_lhs=G if mg else None,
        ineq_rhs=h if mg else None,
        eq_lhs=E if me else None,
        eq_rhs=f if me else None,
        upper_bounds=np.full(n, 2.0),
    )
    return p, z0


def _feasible_mask(p, points, tol):
    ok = np.ones(len(points), dtype=bool)
    if p.ineq_lhs.shape[0]:
        ok &= np.all(points @ p.ineq_lhs.T <= p.ineq_rhs + tol, axis=1)
    if p.eq_lhs.shape[0]:
        ok &= np.all(np.abs(points @ p.eq_lhs.T - p.eq_rhs) <= tol, axis=1)
    ok &= np.all(points >= p.lower_bounds - tol, axis=1)
    ok &= np.all(points <= p.upper_bounds + tol, axis=1)
    return ok


def test_weak_duality_on_random_feasible_instances():
    rng = np.random.default_rng(2024)
    for _ in range(40):
        p, z0 = _random_feasible_program(rng)
        sol = solve_lp(p)
        assert sol.status is LPStatus.OPTIMAL
        assert sol.primal_residual <= FEAS_TOL
        # any feasible point scores at most the reported optimum
        samples = rng.uniform(0.0, 2.0, (400, p.n_vars))
        samples[0] = z0
        feasible = samples[_feasible_mask(p, samples, 1e-12)]
        assert len(feasible) >= 1
        assert np.all(feasible @ p.objective <= sol.objective_value + 1e-8)


def test_infeasible_reports_confirmed_by_rejection_sampling():
    rng = np.random.default_rng(99)
    confirmed = 0
    while confirmed < 10:
        n = int(rng.integers(1, 4))
        mg = int(rng.integers(1, 4))
        G = rng.uniform(-2, 2, (mg, n))
        h = rng.uniform(-3.0, -1.5, mg)  # likely contradicts the [0,1] box
        p = LinearProgram(
            objective=rng.uniform(-1, 1, n),
            ineq_lhs=G,
            ineq_rhs=h,
            upper_bounds=np.ones(n),
        )
        sol = solve_lp(p)
        if sol.status is not LPStatus.INFEASIBLE:
            continue
        samples = rng.uniform(0.0, 1.0, (10_000, n))
        assert not np.any(_feasible_mask(p, samples, FEAS_TOL))
        confirmed += 1


def test_iteration_limit_error_is_distinct(monkeypatch):
    import zerosum.lp as lp_mod

    monkeypatch.setattr(lp_mod, "ITERATION_FACTOR", 0)
    p = LinearProgram(objective=[1], ineq_lhs=[[1]], ineq_rhs=[1])
    with pytest.raises(lp_mod.IterationLimitError):
        solve_lp(p)


def test_degenerate_equalities_and_redundant_rows():
    # Duplicated equality rows force redundant phase-1 rows to be dropped.
    p = LinearProgram(
        objective=[1, 1],
        eq_lhs=[[1, 1], [1, 1], [2, 2]],
        eq_rhs=[1, 1, 2],
    )
    sol = solve_lp(p)
    assert sol.status is LPStatus.OPTIMAL
    assert abs(sol.objective_value - 1.0) <= 1e-9
