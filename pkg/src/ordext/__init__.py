"""Order-monotone extension toolkit.

Check whether a partial utility on a preordered set admits a monotone
extension, and evaluate a canonical bounded extension when it does.
"""

from ordext.contours import (
    AnalyticFixture,
    ContourOracle,
    FiniteSampleOracle,
    PartialUtility,
    lower_contour,
    upper_contour,
)
from ordext.extension import (
    AGREEMENT_TOL,
    Band,
    ContourRegion,
    DiscordantFormsError,
    ExtensionEngine,
    UnboundedContourError,
    make_engine,
)
from ordext.extreal import (
    NEG_INF,
    POS_INF,
    ExtReal,
    IndeterminateFormError,
    inf_ext,
    sup_ext,
)
from ordext.fixtures import FIXTURE_NAMES, get_fixture
from ordext.monotonicity import (
    Verdict,
    WeakIncreaseForm,
    Witness,
    check_gap_safe_finite,
    check_gap_safe_pareto,
    check_gap_safe_probes,
    check_strictly_increasing,
    check_weak_increase_form,
    check_weakly_increasing,
)
from ordext.orders import (
    BOTTOM,
    TOP,
    Augmented,
    Comparison,
    FinitePreorder,
    ForeignElementError,
    ParetoSpace,
    Preorder,
    UnsupportedQueryError,
    compare_augmented,
    interior,
    is_pareto_set,
)
from ordext.utility import (
    UtilityFn,
    UtilityKind,
    finite_utility,
    normalize01,
    pareto_base_utility,
    squash,
)

__all__ = [
    "AGREEMENT_TOL",
    "AnalyticFixture",
    "Augmented",
    "BOTTOM",
    "Band",
    "Comparison",
    "ContourOracle",
    "ContourRegion",
    "DiscordantFormsError",
    "ExtReal",
    "ExtensionEngine",
    "FIXTURE_NAMES",
    "FinitePreorder",
    "FiniteSampleOracle",
    "ForeignElementError",
    "IndeterminateFormError",
    "NEG_INF",
    "POS_INF",
    "ParetoSpace",
    "PartialUtility",
    "Preorder",
    "TOP",
    "UnboundedContourError",
    "UnsupportedQueryError",
    "UtilityFn",
    "UtilityKind",
    "Verdict",
    "WeakIncreaseForm",
    "Witness",
    "check_gap_safe_finite",
    "check_gap_safe_pareto",
    "check_gap_safe_probes",
    "check_strictly_increasing",
    "check_weak_increase_form",
    "check_weakly_increasing",
    "compare_augmented",
    "finite_utility",
    "get_fixture",
    "inf_ext",
    "interior",
    "is_pareto_set",
    "lower_contour",
    "make_engine",
    "normalize01",
    "pareto_base_utility",
    "squash",
    "sup_ext",
    "upper_contour",
]
