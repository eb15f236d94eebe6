"""Canonicity analysis of coin systems for the change-making problem.

The greedy payment (largest coin first) is optimal for every value exactly
when the system is canonical.  This package decides canonicity by brute force
over the proven counterexample window, by Pearson's candidate test, and by
closed-form rules for up to six denominations, and ships an enumeration
harness that cross-validates the routes against each other.
"""

from .canonicity import (
    CanonicityVerdict,
    PlusMinusClass,
    is_canonical_bruteforce,
    is_canonical_pearson,
    is_tight,
    min_counterexample,
    pearson_candidates,
    plus_minus_class,
    subsystem,
)
from .characterization import (
    CharacterizationVerdict,
    GrdEllResult,
    canonical3,
    canonical4,
    canonical5,
    canonical6,
    characterize,
    extension_candidates,
    general_family_test,
    grd_ell_closed_form,
    one_point_test,
    shape_ii_closed_forms,
    shape_ii_system,
)
from .core import (
    CoinSystem,
    PaymentAnalysis,
    Representation,
    analyze_payment,
    greedy_coin_count,
    greedy_representation,
    lex_optimal_coin_count,
    lex_smallest_optimal,
    optimal_count,
    parse_system,
)
from .harness import (
    EnumerationSpec,
    ValidationReport,
    cross_validate,
    emit_report,
    enumerate_systems,
    report_from_dict,
)
from . import errors, kernels

__version__ = "0.1.0"

__all__ = [
    "CanonicityVerdict",
    "CharacterizationVerdict",
    "CoinSystem",
    "EnumerationSpec",
    "GrdEllResult",
    "PaymentAnalysis",
    "PlusMinusClass",
    "Representation",
    "ValidationReport",
    "analyze_payment",
    "canonical3",
    "canonical4",
    "canonical5",
    "canonical6",
    "characterize",
    "cross_validate",
    "emit_report",
    "enumerate_systems",
    "errors",
    "extension_candidates",
    "general_family_test",
    "grd_ell_closed_form",
    "greedy_coin_count",
    "greedy_representation",
    "is_canonical_bruteforce",
    "is_canonical_pearson",
    "is_tight",
    "kernels",
    "lex_optimal_coin_count",
    "lex_smallest_optimal",
    "min_counterexample",
    "one_point_test",
    "optimal_count",
    "parse_system",
    "pearson_candidates",
    "plus_minus_class",
    "report_from_dict",
    "shape_ii_closed_forms",
    "shape_ii_system",
    "subsystem",
]
