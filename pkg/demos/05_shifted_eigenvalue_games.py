"""Stochastic eigenvectors force the shifted game value to zero.

If both A and A^T admit stochastic eigenvectors at the same real eigenvalue
lambda, then v(A - lambda*I) = 0 and those eigenvectors are optimal (indeed
optimal-dominated) in the shifted game.  Matrices with every row and column
summing to the same constant s provide an endless supply of examples: the
uniform vector is a two-sided eigenvector at lambda = s.
"""

import numpy as np

from zerosum import GameMatrix, check_shifted_eigen, solve_game, stochastic_eigenvector

rng = np.random.default_rng(21)

for n in (3, 4, 6):
    B = rng.uniform(-3, 3, (n, n))
    # project onto zero row/col sums, then lift every sum to s
    B = B - B.mean(axis=1, keepdims=True) - B.mean(axis=0, keepdims=True) + B.mean()
    s = float(rng.uniform(-2, 2))
    B += s / n
    A = GameMatrix(B)

    y = stochastic_eigenvector(A, s)
    x = stochastic_eigenvector(A.transpose(), s)
    shifted = GameMatrix(A.values - s * np.eye(n))
    print(f"{n}x{n} constant-sum matrix, lambda = {s:+.3f}")
    print("  eigenvector of A:", y.weights)
    print("  eigenvector of A^T:", x.weights)
    print("  v(A - lambda I) =", f"{solve_game(shifted).value:+.2e}")
    print("  audit:", check_shifted_eigen(A, s).verdict.value)
