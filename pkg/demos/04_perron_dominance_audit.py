"""Perron certificates and the positive-matrix dominance audit.

For a strictly positive matrix the Perron root and vector bracket the game
value via [root*min(y*), root*max(y*)].  The claimed consequence - every
optimal row strategy equalizes all columns at the value - holds for some
matrices and demonstrably fails for others, so it is audited per instance.
"""

from zerosum import (
    GameMatrix,
    check_positive_dominated,
    perron,
    row_optima_column_extrema,
    solve_game,
)

for entries in ([[2, 1], [1, 2]], [[1, 2], [3, 4]], [[1, 1], [1, 1]]):
    A = GameMatrix(entries)
    cert = perron(A)
    sol = solve_game(A)
    lo = cert.perron_root * cert.perron_vector.min()
    hi = cert.perron_root * cert.perron_vector.max()
    print(f"{entries}: root {cert.perron_root:.4f}, "
          f"bracket [{lo:.4f}, {hi:.4f}], value {sol.value:.4f}")
    mins, maxs = row_optima_column_extrema(A, sol.value, 1e-7)
    print("  column payoffs over the optimal set:",
          [f"[{a:.4f},{b:.4f}]" for a, b in zip(mins, maxs)])
    rep = check_positive_dominated(A)
    print("  dominance audit:", rep.verdict.value)

# [[1,2],[3,4]] satisfies the bracket hypothesis (3 sits inside it) yet its
# unique optimum (0,1) pays 4 against the second column, not the value 3 -
# a concrete counterexample the audit reports as Violated.
