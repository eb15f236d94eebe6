"""Coin systems, representations, the greedy algorithm and the optimal solver.

A coin system is a strictly increasing tuple of positive integers starting at
1, so every nonnegative value is payable.  The greedy payment repeatedly takes
the largest coin not exceeding the remainder; the optimal payment minimizes
the total number of coins (computed by dynamic programming over 0..v), with
ties broken toward the lexicographically smallest count vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    EmptyInputError,
    IndexOutOfRangeError,
    NonPositiveValueError,
    NotStartingAtOneError,
    NotStrictlyIncreasingError,
    OverflowRiskError,
    ParseError,
)

# 2*c_n must stay representable in the int64 kernels
MAX_DENOMINATION = (2**63 - 1) // 2


@dataclass(frozen=True)
class CoinSystem:
    """Strictly increasing positive denominations (c1, ..., cn) with c1 = 1."""

    denominations: tuple[int, ...]

    def __post_init__(self):
        denoms = tuple(int(c) for c in self.denominations)
        object.__setattr__(self, "denominations", denoms)
        if not denoms:
            raise EmptyInputError("a coin system needs at least one denomination")
        for c in denoms:
            if c <= 0:
                raise NonPositiveValueError(f"denomination {c} is not positive")
            if c > MAX_DENOMINATION:
                raise OverflowRiskError(f"denomination {c} risks 64-bit overflow (2*cn)")
        if denoms[0] != 1:
            raise NotStartingAtOneError(f"smallest denomination must be 1, got {denoms[0]}")
        for a, b in zip(denoms, denoms[1:]):
            if a >= b:
                raise NotStrictlyIncreasingError(f"denominations must increase: {a} >= {b}")

    @property
    def n(self) -> int:
        return len(self.denominations)

    def coin(self, i: int) -> int:
        """Denomination c_i, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRangeError(f"coin index {i} outside 1..{self.n}")
        return self.denominations[i - 1]

    def as_array(self) -> np.ndarray:
        """Denominations as an int64 array for the kernels (cached)."""
        arr = self.__dict__.get("_arr")
        if arr is None:
            arr = np.array(self.denominations, dtype=np.int64)
            arr.setflags(write=False)
            self.__dict__["_arr"] = arr
        return arr

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.denominations)


@dataclass(frozen=True)
class Representation:
    """Per-denomination coin counts for a value, with their total."""

    counts: tuple[int, ...]
    value: int
    total: int

    def __post_init__(self):
        if self.total != sum(self.counts):
            raise ValueError("total does not match the counts")

    def count(self, i: int) -> int:
        """Count x_i, 1-based."""
        if not 1 <= i <= len(self.counts):
            raise IndexOutOfRangeError(f"coin index {i} outside 1..{len(self.counts)}")
        return self.counts[i - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.counts) + ")"


@dataclass(frozen=True)
class PaymentAnalysis:
    """Greedy vs optimal payment of one value: totals and counterexample flag."""

    value: int
    greedy: Representation
    optimal: Representation
    grd: int
    opt: int
    is_counterexample: bool


def parse_system(text: str) -> CoinSystem:
    """Parse a comma-separated denomination list such as "1,3,4".

    The input must already be in increasing order; nothing is sorted silently.
    """
    if text is None or not text.strip():
        raise EmptyInputError("empty coin-system text")
    denoms = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ParseError(f"empty item in {text!r}")
        try:
            denoms.append(int(token, 10))
        except ValueError:
            raise ParseError(f"not a base-10 integer: {token!r}") from None
    return CoinSystem(tuple(denoms))


def _check_value(value: int) -> int:
    value = int(value)
    if value < 0:
        raise ValueError(f"value must be nonnegative, got {value}")
    return value


def _representation(system: CoinSystem, counts: np.ndarray, value: int) -> Representation:
    return Representation(tuple(int(x) for x in counts), value, int(counts.sum()))


def greedy_representation(system: CoinSystem, value: int) -> Representation:
    """Greedy payment of value: scan coins from largest to smallest, take floor(rest/ci)."""
    value = _check_value(value)
    counts = kernels.greedy_counts(system.as_array(), value)
    return _representation(system, counts, value)


def greedy_coin_count(system: CoinSystem, value: int, i: int) -> int:
    """Number of c_i coins (1-based i) in the greedy payment of value."""
    if not 1 <= i <= system.n:
        raise IndexOutOfRangeError(f"coin index {i} outside 1..{system.n}")
    return greedy_representation(system, value).counts[i - 1]


def optimal_count(system: CoinSystem, value: int) -> int:
    """Minimum number of coins summing to value (always feasible since c1 = 1)."""
    value = _check_value(value)
    if value == 0:
        return 0
    return int(kernels.opt_table(system.as_array(), value)[value])


def lex_smallest_optimal(system: CoinSystem, value: int) -> Representation:
    """The lexicographically smallest optimal representation of value.

    Among count vectors attaining the minimum total, smaller x1 wins, then x2,
    and so on (there is some k with x_k < x'_k and equality before k).
    """
    value = _check_value(value)
    counts = kernels.lex_smallest_counts(system.as_array(), value)
    return _representation(system, counts, value)


def lex_optimal_coin_count(system: CoinSystem, value: int, i: int) -> int:
    """Number of c_i coins (1-based i) in the lex-smallest optimal representation."""
    if not 1 <= i <= system.n:
        raise IndexOutOfRangeError(f"coin index {i} outside 1..{system.n}")
    return lex_smallest_optimal(system, value).counts[i - 1]


def analyze_payment(system: CoinSystem, value: int) -> PaymentAnalysis:
    """Bundle greedy and lex-smallest-optimal payments of a positive value."""
    value = int(value)
    if value < 1:
        raise ValueError(f"payment value must be positive, got {value}")
    greedy = greedy_representation(system, value)
    optimal = lex_smallest_optimal(system, value)
    return PaymentAnalysis(
        value=value,
        greedy=greedy,
        optimal=optimal,
        grd=greedy.total,
        opt=optimal.total,
        is_counterexample=optimal.total < greedy.total,
    )
