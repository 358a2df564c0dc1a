"""The strictly increasing extension and its equivalent evaluation forms.

Given contour bounds a(x) (lower supremum) and b(x) (upper infimum), an
interval (alpha, beta), and a pair of utility representations (one
normalized to (0, 1), one scaled to (alpha, beta)), the engine blends
the bounds with the utility so that the result restricts to the sample
values and increases strictly with the preorder.

Four algebraically equivalent evaluation routes are provided: the capped
blend (the defining formula), an offset form, routing by contour region,
and routing by band.  They exist to cross-check each other; production
callers can use any one of them.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Callable, Optional, Tuple

from ordext.contours import ContourOracle, FiniteSampleOracle, PartialUtility
from ordext.extreal import NEG_INF, POS_INF, ExtReal
from ordext.monotonicity import check_pareto_set_values
from ordext.orders import Element, FinitePreorder, ParetoSpace, Preorder, UnsupportedQueryError
from ordext.utility import (
    UtilityFn,
    finite_utility,
    normalize01,
    pareto_base_utility,
    squash,
)

__all__ = [
    "Band",
    "ContourRegion",
    "DiscordantFormsError",
    "ExtensionEngine",
    "UnboundedContourError",
    "make_engine",
]

AGREEMENT_TOL = 1e-9


class UnboundedContourError(ArithmeticError):
    """A capped term met an unbounded contour value.

    The defining formula is only well formed when ``a(x) < +inf`` and
    ``b(x) > -inf``; gap-safe inputs guarantee that, so hitting this
    error means the instance was not gap-safe.
    """


class DiscordantFormsError(AssertionError):
    """Overlapping band branches disagreed beyond tolerance."""


class ContourRegion(Enum):
    """Partition of the ground set by sample membership and contour emptiness."""

    SAMPLE = "P"
    BRACKETED = "A"  # samples both below and above
    BELOW = "L"      # no sample below, some above
    ABOVE = "U"      # some sample below, none above
    DETACHED = "N"   # no comparable sample at all


class Band(Enum):
    """Overlapping cover of the ground set by bound-gap geometry."""

    NARROW = "S1"     # b - a <= beta - alpha
    WIDE_LOW = "S2"   # wide gap with b <= beta
    WIDE_HIGH = "S3"  # wide gap with a >= alpha
    SPANNING = "S4"   # a <= alpha and b >= beta


class ExtensionEngine:
    """Evaluator bundle for one extension instance.

    Immutable after construction.  ``unit_utility`` must take values
    strictly inside (0, 1) and ``scaled_utility`` must equal
    ``alpha + (beta - alpha) * unit_utility`` pointwise.
    """

    def __init__(
        self,
        oracle: ContourOracle,
        alpha: float,
        beta: float,
        unit_utility: UtilityFn,
        scaled_utility: UtilityFn,
        agreement_tol: float = AGREEMENT_TOL,
    ):
        if not (alpha < beta):
            raise ValueError(f"need alpha < beta, got {alpha} >= {beta}")
        self._oracle = oracle
        self._alpha = float(alpha)
        self._beta = float(beta)
        self._unit = unit_utility
        self._scaled = scaled_utility
        self._tol = agreement_tol
        self._pareto_validated = False

    @property
    def oracle(self) -> ContourOracle:
        return self._oracle

    @property
    def rel(self) -> Preorder:
        return self._oracle.rel

    @property
    def alpha(self) -> float:
        return self._alpha

    @property
    def beta(self) -> float:
        return self._beta

    @property
    def unit_utility(self) -> UtilityFn:
        return self._unit

    @property
    def scaled_utility(self) -> UtilityFn:
        return self._scaled

    def bounds(self, x) -> Tuple[ExtReal, ExtReal]:
        return self._oracle.lower_sup(x), self._oracle.upper_inf(x)

    def _bounded_floats(self, x) -> Tuple[float, float]:
        a, b = self.bounds(x)
        if not a < POS_INF:
            raise UnboundedContourError(
                f"lower supremum at {x!r} is +inf; instance is not gap-safe"
            )
        if not b > NEG_INF:
            raise UnboundedContourError(
                f"upper infimum at {x!r} is -inf; instance is not gap-safe"
            )
        return a.as_float(), b.as_float()

    # Evaluation forms.  All compute convex blends as lo + (hi - lo)*t
    # rather than lo*(1-t) + hi*t: the two are algebraically equal, but
    # only the first returns lo exactly when lo == hi, which the
    # restriction guarantee relies on.

    def evaluate(self, x: Element) -> float:
        """The defining capped blend."""
        a, b = self._bounded_floats(x)
        u = self._unit(x)
        lo = max(a, min(b, self._beta) - self._beta + self._alpha)
        hi = min(b, max(a, self._alpha) - self._alpha + self._beta)
        return lo + (hi - lo) * u

    def evaluate_offset_form(self, x: Element) -> float:
        """Equivalent form organized around the scaled utility."""
        a, b = self._bounded_floats(x)
        u = self._scaled(x)
        alpha, beta = self._alpha, self._beta
        low_part = max(a - alpha, min(b - beta, 0.0))
        high_part = min(b - beta, max(a - alpha, 0.0))
        return (low_part * (beta - u) + high_part * (u - alpha)) / (beta - alpha) + u

    def classify_contour_region(self, x: Element) -> ContourRegion:
        if self._oracle.in_samples(x):
            return ContourRegion.SAMPLE
        has_lower, has_upper = self._oracle.contour_occupancy(x)
        if has_lower and has_upper:
            return ContourRegion.BRACKETED
        if has_upper:
            return ContourRegion.BELOW
        if has_lower:
            return ContourRegion.ABOVE
        return ContourRegion.DETACHED

    def evaluate_by_contour_region(self, x: Element) -> float:
        """Route by contour region; bracketed points fall back to the offset form."""
        region = self.classify_contour_region(x)
        if region is ContourRegion.SAMPLE:
            return self._oracle.sample_value(x)
        if region is ContourRegion.BRACKETED:
            return self.evaluate_offset_form(x)
        u = self._scaled(x)
        if region is ContourRegion.BELOW:
            _, b = self._bounded_floats(x)
            return min(b - self._beta, 0.0) + u
        if region is ContourRegion.ABOVE:
            a, _ = self._bounded_floats(x)
            return max(a - self._alpha, 0.0) + u
        return u

    def classify_bands(self, x: Element) -> Tuple[Band, ...]:
        """All bands containing ``x``; never empty (bands cover the space).

        Classification is total: unbounded contour values are allowed
        here even though evaluation would refuse them.  The gap width
        b - a counts as +inf whenever a = -inf or b = +inf, so detached
        points land in the spanning band only.
        """
        a = self._oracle.lower_sup(x).as_float()
        b = self._oracle.upper_inf(x).as_float()
        span = self._beta - self._alpha
        width = math.inf if (a == -math.inf or b == math.inf) else b - a
        labels = []
        if width <= span:
            labels.append(Band.NARROW)
        if width >= span and b <= self._beta:
            labels.append(Band.WIDE_LOW)
        if width >= span and a >= self._alpha:
            labels.append(Band.WIDE_HIGH)
        if a <= self._alpha and b >= self._beta:
            labels.append(Band.SPANNING)
        if not labels:
            raise AssertionError(f"band cover failed at {x!r}: a={a}, b={b}")
        return tuple(labels)

    def _band_value(self, x: Element, band: Band) -> float:
        a, b = self._bounded_floats(x)
        if band is Band.NARROW:
            return a + (b - a) * self._unit(x)
        if band is Band.WIDE_LOW:
            return b + self._scaled(x) - self._beta
        if band is Band.WIDE_HIGH:
            return a + self._scaled(x) - self._alpha
        return self._scaled(x)

    def evaluate_by_band(self, x: Element) -> float:
        """Route by band; overlapping branches are cross-checked."""
        bands = self.classify_bands(x)
        values = [self._band_value(x, band) for band in bands]
        first = values[0]
        for band, value in zip(bands[1:], values[1:]):
            if abs(value - first) > self._tol:
                raise DiscordantFormsError(
                    f"bands {bands[0].value} and {band.value} disagree at {x!r}: "
                    f"{first} vs {value}"
                )
        return first

    def evaluate_all_forms(self, x: Element) -> Tuple[float, float, float, float]:
        """All four routes at once, cross-checked against each other."""
        results = (
            self.evaluate(x),
            self.evaluate_offset_form(x),
            self.evaluate_by_contour_region(x),
            self.evaluate_by_band(x),
        )
        first = results[0]
        for value in results[1:]:
            if abs(value - first) > self._tol:
                raise DiscordantFormsError(
                    f"evaluation forms disagree at {x!r}: {results}"
                )
        return results

    # Pareto-set fast path.

    def _ensure_pareto_set(self) -> PartialUtility:
        if not isinstance(self._oracle, FiniteSampleOracle):
            raise UnsupportedQueryError(
                "the Pareto-set path needs an enumerable sample set"
            )
        samples = self._oracle.samples
        if not self._pareto_validated:
            verdict = check_pareto_set_values(self.rel, samples)
            if not verdict.holds:
                raise ValueError(
                    f"sample values are not extendable from a Pareto set: "
                    f"{verdict.witness.describe()}"
                )
            self._pareto_validated = True
        return samples

    def _equivalent_sample(self, samples: PartialUtility, x: Element) -> Optional[Element]:
        if self._oracle.in_samples(x):
            return x
        if isinstance(self.rel, ParetoSpace):
            # coordinatewise order is antisymmetric: equivalence is equality
            return None
        for p in samples.points:
            if self.rel.equivalent(p, x):
                return p
        return None

    def evaluate_pareto_set(self, x: Element) -> float:
        """Fast path when the samples form a Pareto set.

        Points equivalent to a sample copy that sample's value; everything
        else goes through band routing.  Agrees with the offset form.
        """
        samples = self._ensure_pareto_set()
        p = self._equivalent_sample(samples, x)
        if p is not None:
            return samples.value(p)
        return self.evaluate_by_band(x)


def make_engine(
    oracle: ContourOracle,
    alpha: float = 0.0,
    beta: float = 1.0,
    base_utility: Optional[UtilityFn] = None,
) -> ExtensionEngine:
    """Assemble an engine, deriving utilities from the oracle's preorder.

    Without an explicit base utility, finite preorders get the layered
    integer utility and Pareto spaces the coordinate sum.  The base is
    squashed into (alpha, beta) and normalized, which makes the two
    engine utilities exact affine relatives of each other.
    """
    rel = oracle.rel
    if base_utility is None:
        if isinstance(rel, FinitePreorder):
            base_utility = finite_utility(rel)
        elif isinstance(rel, ParetoSpace):
            base_utility = pareto_base_utility(rel)
        else:
            raise ValueError(
                f"no default base utility for {type(rel).__name__}; pass one"
            )
    scaled = squash(base_utility, alpha, beta)
    unit = normalize01(scaled, alpha, beta)
    return ExtensionEngine(
        oracle=oracle,
        alpha=alpha,
        beta=beta,
        unit_utility=unit,
        scaled_utility=scaled,
    )
