"""Domain types shared by every module: payoff matrices, mixed strategies,
game solutions, and the elementary payoff evaluation x^T A y.

All types are immutable value objects backed by read-only float64 arrays;
all operations are pure functions, so everything here is safe to share
across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

# Tightest tolerance: a constructed strategy must sum to 1 within this.
STRATEGY_SUM_TOL = 1e-12
# Weights above -NEGATIVE_CLAMP_TOL are treated as rounding noise and clamped.
NEGATIVE_CLAMP_TOL = 1e-12
# Sums within SUM_REPAIR_TOL of 1 are renormalized instead of rejected.
SUM_REPAIR_TOL = 1e-9


class InputError(ValueError):
    """Rejected input: malformed matrix, strategy, or program."""


class DimensionMismatchError(InputError):
    """Shapes of the supplied objects are mutually inconsistent."""


class InvalidMatrixError(InputError):
    """Matrix is empty, non-rectangular, or has non-finite entries."""


class InvalidStrategyError(InputError):
    """Weight vector is not an acceptable probability distribution."""


class Player(enum.Enum):
    ROW = "row"
    COL = "col"


def canonical_float(x: float) -> str:
    """Render a float with 17 significant digits (round-trip exact).

    Negative zero is normalized to "0" so canonical renderings are unique.
    """
    x = float(x)
    if x == 0.0:
        x = 0.0
    return "%.17g" % x


def canonical_json(obj, indent: int = 2) -> str:
    """Deterministic JSON: fixed key order (insertion), floats at 17
    significant digits, no platform-dependent repr involved."""
    import json as _json

    def render(o, level: int) -> str:
        pad = " " * (indent * (level + 1))
        close = " " * (indent * level)
        if o is None:
            return "null"
        if isinstance(o, (bool, np.bool_)):
            return "true" if o else "false"
        if isinstance(o, (int, np.integer)):
            return str(int(o))
        if isinstance(o, (float, np.floating)):
            return canonical_float(float(o))
        if isinstance(o, str):
            return _json.dumps(o)
        if isinstance(o, np.ndarray):
            o = o.tolist()
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            inner = ",\n".join(pad + render(v, level + 1) for v in o)
            return "[\n" + inner + "\n" + close + "]"
        if isinstance(o, dict):
            if not o:
                return "{}"
            inner = ",\n".join(
                f"{pad}{_json.dumps(str(k))}: {render(v, level + 1)}"
                for k, v in o.items()
            )
            return "{\n" + inner + "\n" + close + "}"
        raise TypeError(f"cannot canonicalize {type(o).__name__}")

    return render(obj, 0) + "\n"


@dataclass(frozen=True, eq=False)
class GameMatrix:
    """Dense m-by-n payoff table; entry (i, j) is the row player's payoff
    when row i meets column j.  The column player's payoff is its negation.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=float, order="C")
        if arr.ndim != 2 or arr.size == 0:
            raise InvalidMatrixError(
                f"expected a nonempty 2-D matrix, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise InvalidMatrixError("matrix entries must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def cols(self) -> int:
        return self.values.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> float:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionMismatchError(
                f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix"
            )
        return float(self.values[i, j])

    def transpose(self) -> "GameMatrix":
        return GameMatrix(self.values.T)

    def digest(self) -> str:
        """Canonical text rendering, e.g. "2x2[1,2;3,4]"."""
        body = ";".join(
            ",".join(canonical_float(v) for v in row) for row in self.values
        )
        return f"{self.rows}x{self.cols}[{body}]"

    def __repr__(self) -> str:
        return f"GameMatrix({self.digest()})"


@dataclass(frozen=True, eq=False)
class MixedStrategy:
    """Probability distribution over one player's pure strategies."""

    player: Player
    weights: np.ndarray

    def __post_init__(self) -> None:
        w = np.array(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0:
            raise InvalidStrategyError("strategy must be a nonempty vector")
        if not np.all(np.isfinite(w)):
            raise InvalidStrategyError("strategy weights must be finite")
        if np.any(w < 0.0):
            raise InvalidStrategyError(
                f"negative weight {w.min():g}; use validate_strategy to clamp noise"
            )
        if abs(w.sum() - 1.0) > STRATEGY_SUM_TOL:
            raise InvalidStrategyError(
                f"weights sum to {w.sum()!r}, not 1; use validate_strategy to repair"
            )
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return self.weights.size

    def support(self, tol: float = 0.0) -> tuple[int, ...]:
        """Indices carrying weight strictly greater than tol."""
        return tuple(int(i) for i in np.nonzero(self.weights > tol)[0])

    def __repr__(self) -> str:
        body = ",".join(canonical_float(v) for v in self.weights)
        return f"MixedStrategy({self.player.value},[{body}])"


def validate_strategy(weights, player: Player = Player.ROW) -> MixedStrategy:
    """Build a MixedStrategy from raw (possibly LP-noisy) weights.

    Entries in [-1e-12, 0) are clamped to zero; sums within 1e-9 of 1 are
    renormalized.  Anything dirtier is rejected with InvalidStrategyError.
    """
    w = np.array(weights, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise InvalidStrategyError("strategy must be a nonempty vector")
    if not np.all(np.isfinite(w)):
        raise InvalidStrategyError("strategy weights must be finite")
    if np.any(w < -NEGATIVE_CLAMP_TOL):
        raise InvalidStrategyError(
            f"weight {w.min():g} is negative beyond tolerance {-NEGATIVE_CLAMP_TOL:g}"
        )
    w = np.where(w < 0.0, 0.0, w)
    total = w.sum()
    if abs(total - 1.0) > SUM_REPAIR_TOL:
        raise InvalidStrategyError(
            f"weights sum to {total!r}, outside 1 +/- {SUM_REPAIR_TOL:g}"
        )
    return MixedStrategy(player, w / total)


def uniform_strategy(n: int, player: Player) -> MixedStrategy:
    return MixedStrategy(player, np.full(n, 1.0 / n))


def pure_strategy(n: int, index: int, player: Player) -> MixedStrategy:
    w = np.zeros(n)
    w[index] = 1.0
    return MixedStrategy(player, w)


def payoff(A: GameMatrix, x: MixedStrategy, y: MixedStrategy) -> float:
    """Expected row-player payoff x^T A y; bilinear in x and y."""
    if x.player is not Player.ROW or y.player is not Player.COL:
        raise DimensionMismatchError(
            f"payoff expects (row, col) strategies, got ({x.player.value}, {y.player.value})"
        )
    if len(x) != A.rows or len(y) != A.cols:
        raise DimensionMismatchError(
            f"strategy lengths ({len(x)}, {len(y)}) do not match a "
            f"{A.rows}x{A.cols} matrix"
        )
    return float(x.weights @ A.values @ y.weights)


@dataclass(frozen=True)
class GameSolution:
    """Value and one optimal strategy pair, with the certified residuals.

    Invariants (enforced by the solver before construction):
      min_j (x^T A)_j >= value - tolerance
      max_i (A y)_i  <= value + tolerance
      duality_gap    <= tolerance
    """

    value: float
    row_strategy: MixedStrategy
    col_strategy: MixedStrategy
    duality_gap: float
    tolerance: float

    def __post_init__(self) -> None:
        if self.tolerance <= 0.0:
            raise InputError("tolerance must be positive")
        if self.duality_gap < 0.0:
            raise InputError("duality gap cannot be negative")
