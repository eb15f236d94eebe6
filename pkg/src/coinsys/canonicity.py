"""Canonicity decisions: brute force over the proven window, and Pearson's test.

A value w is a counterexample to a system when the greedy payment of w is
suboptimal; a system without counterexamples is canonical.  Any minimum
counterexample w of an n-coin system (n >= 3) satisfies c3 + 1 < w < c_{n-1} + c_n,
so scanning that window decides canonicity exactly.  Pearson's O(n^3) test
instead evaluates a quadratic set of candidate values built from greedy
payments of c_{j+1} - 1; the minimum counterexample is always among them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .core import CoinSystem, analyze_payment
from .errors import IndexOutOfRangeError, WrongSizeError

BRUTE_FORCE = "brute_force"
PEARSON = "pearson"
CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class CanonicityVerdict:
    """Canonical or not, with the minimal counterexample and its greedy/optimal totals."""

    system: CoinSystem
    canonical: bool
    min_counterexample: int | None
    method: str
    witness: tuple[int, int] | None = None  # (grd, opt) at the counterexample

    def to_dict(self, pm_class: str | None = None) -> dict:
        d = {
            "system": list(self.system.denominations),
            "canonical": self.canonical,
            "min_counterexample": self.min_counterexample,
            "method": self.method,
        }
        if pm_class is not None:
            d["pm_class"] = pm_class
        return d


@dataclass(frozen=True)
class PlusMinusClass:
    """One '+' or '-' per prefix length: '+' when the prefix system is canonical."""

    symbols: str

    def __str__(self) -> str:
        return self.symbols


def subsystem(system: CoinSystem, k: int) -> CoinSystem:
    """The prefix system (c1, ..., ck), 1-based k."""
    if not 1 <= k <= system.n:
        raise IndexOutOfRangeError(f"prefix length {k} outside 1..{system.n}")
    return CoinSystem(system.denominations[:k])


def _window(system: CoinSystem) -> tuple[int, int]:
    # minimum-counterexample window [c3 + 2, c_{n-1} + c_n - 1]
    d = system.denominations
    return d[2] + 2, d[-2] + d[-1] - 1


def min_counterexample(system: CoinSystem) -> int | None:
    """Smallest value whose greedy payment is suboptimal, or None if canonical.

    Systems with one or two denominations never have one; otherwise only the
    window c3 + 1 < w < c_{n-1} + c_n needs scanning.
    """
    if system.n <= 2:
        return None
    lo, hi = _window(system)
    w = int(kernels.first_counterexample(system.as_array(), lo, hi))
    return w if w else None


def _verdict(system: CoinSystem, w: int | None, method: str) -> CanonicityVerdict:
    if w is None:
        return CanonicityVerdict(system, True, None, method)
    analysis = analyze_payment(system, w)
    return CanonicityVerdict(system, False, w, method, (analysis.grd, analysis.opt))


def is_canonical_bruteforce(system: CoinSystem) -> CanonicityVerdict:
    """Decide canonicity by scanning the proven counterexample window."""
    return _verdict(system, min_counterexample(system), BRUTE_FORCE)


def pearson_candidates(system: CoinSystem) -> set[int]:
    """Candidate values for the minimum counterexample (Pearson's construction).

    For each pair (i, j) with 1 <= i <= j < n, take the greedy counts g of
    c_{j+1} - 1, zero positions 1..i-1 and j+1..n, and bump position i to
    g_i + 1; the candidate is the value of the resulting count vector.
    """
    if system.n < 3:
        raise WrongSizeError("pearson candidates need at least three denominations")
    d = system.denominations
    n = system.n
    out: set[int] = set()
    for j in range(n - 1):  # 0-based j, pairs (i, j) with j < n - 1
        g = kernels.greedy_counts(system.as_array(), d[j + 1] - 1)
        for i in range(j + 1):
            val = d[i] * (int(g[i]) + 1)
            for m in range(i + 1, j + 1):
                val += d[m] * int(g[m])
            out.add(val)
    return out


def is_canonical_pearson(system: CoinSystem) -> CanonicityVerdict:
    """Decide canonicity from Pearson's candidates alone.

    A candidate whose own coin total beats the greedy total of its value
    certifies a counterexample; the smallest certified candidate is the
    minimum counterexample.
    """
    if system.n <= 2:
        return CanonicityVerdict(system, True, None, PEARSON)
    w = int(kernels.pearson_min_certified(system.as_array()))
    return _verdict(system, w if w else None, PEARSON)


def is_tight(system: CoinSystem) -> bool:
    """True when no value below c_n is a counterexample."""
    if system.n <= 2:
        return True
    arr = system.as_array()
    return kernels.first_counterexample(arr, 1, int(arr[-1]) - 1) == 0


def plus_minus_class(system: CoinSystem) -> PlusMinusClass:
    """Canonicity symbol of every prefix, e.g. '+++-+' for (1,2,4,5,8)."""
    symbols = []
    for k in range(1, system.n + 1):
        verdict = is_canonical_bruteforce(subsystem(system, k))
        symbols.append("+" if verdict.canonical else "-")
    return PlusMinusClass("".join(symbols))
