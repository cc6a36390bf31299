import numpy as np
import pytest

from zerosum import GameMatrix

RPS_ENTRIES = [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]


@pytest.fixture
def rps() -> GameMatrix:
    return GameMatrix(RPS_ENTRIES)


@pytest.fixture
def saddle() -> GameMatrix:
    return GameMatrix([[1, 2], [3, 4]])


def random_matrix(rng: np.random.Generator, max_m: int, max_n: int, lo=-5.0, hi=5.0):
    m = int(rng.integers(1, max_m + 1))
    n = int(rng.integers(1, max_n + 1))
    return GameMatrix(rng.uniform(lo, hi, (m, n)))


def random_skew(rng: np.random.Generator, n: int, lo=-5.0, hi=5.0) -> GameMatrix:
    upper = np.zeros((n, n))
    idx = np.triu_indices(n, k=1)
    upper[idx] = rng.uniform(lo, hi, idx[0].size)
    return GameMatrix(upper - upper.T)
