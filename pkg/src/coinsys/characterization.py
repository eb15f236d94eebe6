"""Closed-form canonicity rules for up to six denominations, plus family tests.

Sizes one and two are always canonical.  Three coins reduce to the division
c3 = q*c2 + r; four, five and six coins chain the one-point inequality
grd(m*c_{n-1}) <= m with m = ceil(c_n / c_{n-1}) over canonical prefixes, and
the five/six-coin cases admit exceptional families whose prefix is
noncanonical.  Every rule here uses greedy totals only; the dynamic-programming
oracle lives in `canonicity` so the two routes stay independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from . import kernels
from .canonicity import is_canonical_bruteforce, subsystem
from .core import CoinSystem
from .errors import (
    DomainViolationError,
    HypothesisViolatedError,
    PrerequisiteViolatedError,
    UnsupportedSizeError,
    WrongSizeError,
)


@dataclass(frozen=True)
class CharacterizationVerdict:
    """Closed-form verdict: the clause that fired and the quantities it used."""

    system: CoinSystem
    canonical: bool
    rule: str
    parameters: dict[str, int] = field(default_factory=dict)

    def to_dict(self, pm_class: str | None = None) -> dict:
        d = {
            "system": list(self.system.denominations),
            "canonical": self.canonical,
            "min_counterexample": None,
            "method": "closed_form",
            "rule": self.rule,
            "parameters": dict(self.parameters),
        }
        if pm_class is not None:
            d["pm_class"] = pm_class
        return d


class GrdEllResult(NamedTuple):
    ell: int
    formula_value: int
    matches: bool


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _grd(system: CoinSystem, value: int) -> int:
    return int(kernels.greedy_total(system.as_array(), value))


def _require_size(system: CoinSystem, n: int) -> None:
    if system.n != n:
        raise WrongSizeError(f"expected {n} denominations, got {system.n}")


def canonical3(system: CoinSystem) -> CharacterizationVerdict:
    """Three-coin rule: with c3 = q*c2 + r, canonical iff r = 0 or c2 - q <= r."""
    _require_size(system, 3)
    _, c2, c3 = system.denominations
    q, r = divmod(c3, c2)
    params = {"q": q, "r": r}
    if r == 0:
        return CharacterizationVerdict(system, True, "n3.r0", params)
    if c2 - q <= r:
        return CharacterizationVerdict(system, True, "n3.geq", params)
    return CharacterizationVerdict(system, False, "n3.ineq", params)


def one_point_test(system: CoinSystem) -> bool:
    """Single-value canonicity test when the (n-1)-prefix is canonical.

    With m = ceil(c_n / c_{n-1}), the system is canonical iff the greedy
    payment of m*c_{n-1} uses at most m coins.  Raises when the prefix is not
    canonical, since the equivalence only holds under that hypothesis.
    """
    if system.n < 2:
        raise WrongSizeError("one-point test needs at least two denominations")
    prefix = subsystem(system, system.n - 1)
    if not is_canonical_bruteforce(prefix).canonical:
        raise PrerequisiteViolatedError(f"prefix {prefix} is not canonical")
    d = system.denominations
    m = _ceil_div(d[-1], d[-2])
    return _grd(system, m * d[-2]) <= m


def canonical4(system: CoinSystem) -> CharacterizationVerdict:
    """Four-coin rule: canonical 3-prefix and grd(m*c3) <= m for m = ceil(c4/c3)."""
    _require_size(system, 4)
    d = system.denominations
    prefix = canonical3(subsystem(system, 3))
    if not prefix.canonical:
        return CharacterizationVerdict(system, False, "n4.prefix", dict(prefix.parameters))
    m = _ceil_div(d[3], d[2])
    grd = _grd(system, m * d[2])
    return CharacterizationVerdict(system, grd <= m, "n4.onepoint", {"m": m, "grd": grd})


def canonical5(system: CoinSystem) -> CharacterizationVerdict:
    """Five-coin rule: one-point over a canonical 4-prefix, or the family
    (1, 2, c3, c3+1, 2*c3) with c3 > 3."""
    _require_size(system, 5)
    d = system.denominations
    prefix = canonical4(subsystem(system, 4))
    if prefix.canonical:
        m = _ceil_div(d[4], d[3])
        grd = _grd(system, m * d[3])
        return CharacterizationVerdict(system, grd <= m, "n5.a", {"m": m, "grd": grd})
    c3 = d[2]
    shape = d[1] == 2 and d[3] == c3 + 1 and d[4] == 2 * c3 and c3 > 3
    return CharacterizationVerdict(system, shape, "n5.b", {"c3": c3})


def grd_ell_closed_form(system: CoinSystem) -> GrdEllResult:
    """Check grd(l*c3) = l*c3 - c5 + 1 - floor((l*c3 - c5)/c2)*(c2 - 1) for l = ceil(c5/c3)."""
    _require_size(system, 6)
    _, c2, c3, _, c5, _ = system.denominations
    ell = _ceil_div(c5, c3)
    gap = ell * c3 - c5
    formula = gap + 1 - (gap // c2) * (c2 - 1)
    grd = _grd(system, ell * c3)
    return GrdEllResult(ell, formula, grd == formula)


def canonical6(system: CoinSystem) -> CharacterizationVerdict:
    """Six-coin rule.

    Either the 5-prefix is canonical and the one-point inequality holds, or
    the prefix is noncanonical, grd(l*c3) matches its closed form, and the
    system is one of three exceptional shapes:

      i)   (1, 2, 3, c4, c4+1, 2*c4) with c4 > 4
      ii)  (1, c2, 2*c2-1, c4, c2+c4-1, 2*c4-1) with c4 >= 3*c2-1 and grd(l*c3) <= l
      iii) (1, c2, 2*c2, c4, c2+c4, 2*c4) with c4 >= 3*c2-1, c4 != 3*c2 and grd(l*c3) <= l
    """
    _require_size(system, 6)
    d = system.denominations
    prefix = canonical5(subsystem(system, 5))
    if prefix.canonical:
        m = _ceil_div(d[5], d[4])
        grd = _grd(system, m * d[4])
        return CharacterizationVerdict(system, grd <= m, "n6.a", {"m": m, "grd": grd})

    _, c2, c3, c4, c5, c6 = d
    ell, formula, matches = grd_ell_closed_form(system)
    grd_ell = _grd(system, ell * c3)
    params = {"ell": ell, "grd_ell_c3": grd_ell, "formula": formula}
    rule = None
    if c2 == 2 and c3 == 3 and c5 == c4 + 1 and c6 == 2 * c4 and c4 > 4:
        rule = "n6.b.i"
    elif (
        c3 == 2 * c2 - 1
        and c5 == c2 + c4 - 1
        and c6 == 2 * c4 - 1
        and c4 >= 3 * c2 - 1
        and grd_ell <= ell
    ):
        rule = "n6.b.ii"
    elif (
        c3 == 2 * c2
        and c5 == c2 + c4
        and c6 == 2 * c4
        and c4 >= 3 * c2 - 1
        and c4 != 3 * c2
        and grd_ell <= ell
    ):
        rule = "n6.b.iii"
    if rule is not None and matches:
        return CharacterizationVerdict(system, True, rule, params)
    return CharacterizationVerdict(system, False, "n6.b", params)


def characterize(system: CoinSystem) -> CharacterizationVerdict:
    """Dispatch to the closed-form rule for the system's size (n <= 6)."""
    n = system.n
    if n <= 2:
        return CharacterizationVerdict(system, True, "small")
    if n == 3:
        return canonical3(system)
    if n == 4:
        return canonical4(system)
    if n == 5:
        return canonical5(system)
    if n == 6:
        return canonical6(system)
    raise UnsupportedSizeError(f"no closed form for {n} denominations (max 6)")


def general_family_test(system: CoinSystem) -> bool:
    """Test the staircase family among systems with c_n = 2*c_{n-1} - c2, n >= 5.

    Returns True iff the system is exactly (1, 2, ..., n-3, a, a+1, 2a) with
    a > n-2; under the hypothesis this is equivalent to the system being
    canonical while its (n-1)-prefix is not.
    """
    n = system.n
    if n < 5:
        raise WrongSizeError(f"family test needs at least five denominations, got {n}")
    d = system.denominations
    if d[-1] != 2 * d[-2] - d[1]:
        raise HypothesisViolatedError(f"last coin {d[-1]} != 2*{d[-2]} - {d[1]}")
    for i in range(n - 3):
        if d[i] != i + 1:
            return False
    a = d[n - 3]
    return d[n - 2] == a + 1 and d[n - 1] == 2 * a and a > n - 2


def extension_candidates(system: CoinSystem) -> tuple[int, ...]:
    """Admissible last coins 2*c_{n-1} - c_i (i = 2..n-2) for a canonical
    extension of a noncanonical prefix; only the i = 2 case carries a proven
    characterization (the staircase family)."""
    n = system.n
    if n < 4:
        raise WrongSizeError("extension candidates need at least four denominations")
    d = system.denominations
    return tuple(2 * d[-2] - d[i] for i in range(1, n - 2))


def shape_ii_closed_forms(c2: int, s: int, t: int) -> tuple[int, int, int]:
    """Closed-form (c4, l, grd(l*c3)) for the shape-(ii) family.

    The family is (1, c2, 2*c2-1, c4, c2+c4-1, 2*c4-1) with c4 decomposed as
    c4 = 2*c2 + s*c3 + t, 0 <= t < c3.  Then l = s+2 and grd(l*c3) = c2 - t
    when t < c2, else l = s+3 and grd(l*c3) = c3 - t + 1.
    """
    c2, s, t = int(c2), int(s), int(t)
    if c2 < 2:
        raise DomainViolationError(f"c2 must be at least 2, got {c2}")
    if s < 0:
        raise DomainViolationError(f"s must be nonnegative, got {s}")
    c3 = 2 * c2 - 1
    if not 0 <= t < c3:
        raise DomainViolationError(f"t={t} outside [0, {c3})")
    c4 = 2 * c2 + s * c3 + t
    if t < c2:
        return c4, s + 2, c2 - t
    return c4, s + 3, c3 - t + 1


def shape_ii_system(c2: int, s: int, t: int) -> CoinSystem:
    """The shape-(ii) system (1, c2, 2*c2-1, c4, c2+c4-1, 2*c4-1) for the decomposition."""
    c4, _, _ = shape_ii_closed_forms(c2, s, t)
    c3 = 2 * c2 - 1
    return CoinSystem((1, c2, c3, c4, c2 + c4 - 1, 2 * c4 - 1))
