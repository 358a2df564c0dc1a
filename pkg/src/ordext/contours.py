"""Sample-set contours and the two extended-real bound functions.

For a partial function on samples ``P``, every query point ``x`` has a
lower contour (samples weakly below ``x``) and an upper contour (samples
weakly above).  The bound functions return the supremum of the sample
values over the lower contour (``lower_sup``) and the infimum over the
upper contour (``upper_inf``), with ``sup empty = -inf`` and
``inf empty = +inf``.

Oracles hide how the bounds are produced: :class:`FiniteSampleOracle`
enumerates a finite sample set, while :class:`AnalyticFixture` carries
closed forms supplied by a fixture author, which is the only honest way
to represent infinite sample sets.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple

from ordext.extreal import NEG_INF, POS_INF, ExtReal, inf_ext, sup_ext
from ordext.orders import (
    Augmented,
    Comparison,
    Element,
    Preorder,
    UnsupportedQueryError,
    compare_augmented,
    interior,
)

__all__ = [
    "AnalyticFixture",
    "ContourOracle",
    "FiniteSampleOracle",
    "PartialUtility",
    "as_augmented",
    "lower_contour",
    "upper_contour",
]


def as_augmented(x) -> Augmented:
    return x if isinstance(x, Augmented) else interior(x)


class PartialUtility:
    """Finite sample set with one finite real value per sample."""

    __slots__ = ("_points", "_values")

    def __init__(self, values: Mapping[Element, float]):
        for p, v in values.items():
            if isinstance(v, float) and not math.isfinite(v):
                raise ValueError(f"sample {p!r} has non-finite value {v!r}")
        self._points = tuple(values)
        self._values = dict(values)

    @property
    def points(self) -> Tuple[Element, ...]:
        return self._points

    def value(self, p: Element) -> float:
        try:
            return self._values[p]
        except KeyError:
            raise KeyError(f"{p!r} is not a sample point") from None

    def __contains__(self, p: Element) -> bool:
        return p in self._values

    def __len__(self) -> int:
        return len(self._points)

    def items(self) -> Iterator[Tuple[Element, float]]:
        return iter(self._values.items())

    def restrict(self, points: Iterable[Element]) -> "PartialUtility":
        return PartialUtility({p: self._values[p] for p in points})

    def __repr__(self) -> str:
        return f"PartialUtility({self._values!r})"


def _dominates(rel: Preorder, hi: Augmented, lo: Augmented) -> bool:
    return compare_augmented(rel, hi, lo) in (
        Comparison.EQUIVALENT,
        Comparison.STRICTLY_GREATER,
    )


def lower_contour(rel: Preorder, points: Iterable[Element], x) -> list:
    """Sample points weakly below ``x`` (which may be augmented)."""
    x = as_augmented(x)
    return [p for p in points if _dominates(rel, x, interior(p))]


def upper_contour(rel: Preorder, points: Iterable[Element], x) -> list:
    """Sample points weakly above ``x`` (which may be augmented)."""
    x = as_augmented(x)
    return [p for p in points if _dominates(rel, interior(p), x)]


class ContourOracle(ABC):
    """Supplier of the two bound functions over the augmented ground set.

    Implementations must satisfy ``lower_sup(BOTTOM) = -inf`` and
    ``upper_inf(TOP) = +inf`` (the contours of the artificial extremes
    on their far side are empty by construction).
    """

    @property
    @abstractmethod
    def rel(self) -> Preorder:
        """The ambient preorder the contours are taken in."""

    @abstractmethod
    def lower_sup(self, x) -> ExtReal:
        """Supremum of sample values weakly below ``x``; -inf when none."""

    @abstractmethod
    def upper_inf(self, x) -> ExtReal:
        """Infimum of sample values weakly above ``x``; +inf when none."""

    @abstractmethod
    def contour_occupancy(self, x) -> Tuple[bool, bool]:
        """(lower contour non-empty, upper contour non-empty) at ``x``.

        Infinite bounds do not determine this: an infinite sample set can
        fill a contour while its value bound still diverges.
        """

    @abstractmethod
    def in_samples(self, x: Element) -> bool:
        """True iff ``x`` is one of the sample points."""

    @abstractmethod
    def sample_value(self, x: Element) -> float:
        """Value at a sample point; ``KeyError`` otherwise."""


class FiniteSampleOracle(ContourOracle):
    """Bounds computed by enumerating a finite sample set.

    Queries are memoized per point; the cache never changes observable
    behaviour because the oracle is immutable.
    """

    def __init__(self, rel: Preorder, samples: PartialUtility):
        self._rel = rel
        self._samples = samples
        self._cache: Dict[Augmented, Tuple[ExtReal, ExtReal, bool, bool]] = {}

    @property
    def rel(self) -> Preorder:
        return self._rel

    @property
    def samples(self) -> PartialUtility:
        return self._samples

    def _scan(self, x) -> Tuple[ExtReal, ExtReal, bool, bool]:
        # cache keyed by the raw element: interior wrappers unwrap, the
        # two extremes key by their singletons
        if isinstance(x, Augmented) and x.is_interior:
            x = x.element
        entry = self._cache.get(x)
        if entry is None:
            aug = as_augmented(x)
            below = []
            above = []
            for p, v in self._samples.items():
                cmp = compare_augmented(self._rel, aug, interior(p))
                if cmp is Comparison.EQUIVALENT:
                    below.append(v)
                    above.append(v)
                elif cmp is Comparison.STRICTLY_GREATER:
                    below.append(v)
                elif cmp is Comparison.STRICTLY_LESS:
                    above.append(v)
            entry = self._cache[x] = (
                sup_ext(below),
                inf_ext(above),
                bool(below),
                bool(above),
            )
        return entry

    def lower_sup(self, x) -> ExtReal:
        return self._scan(x)[0]

    def upper_inf(self, x) -> ExtReal:
        return self._scan(x)[1]

    def contour_occupancy(self, x) -> Tuple[bool, bool]:
        entry = self._scan(x)
        return entry[2], entry[3]

    def in_samples(self, x: Element) -> bool:
        return x in self._samples

    def sample_value(self, x: Element) -> float:
        return self._samples.value(x)


@dataclass(frozen=True)
class AnalyticFixture(ContourOracle):
    """Closed-form bounds for ground sets too large to enumerate.

    The fixture author supplies the bound functions over augmented
    inputs, a derivation note, and refuting probe pairs ``(x, x_prime)``
    with ``x_prime`` strictly above ``x``.  Probes are re-validated at
    construction time.
    """

    name: str
    ambient: Preorder
    lower_sup_fn: Callable[[Augmented], ExtReal]
    upper_inf_fn: Callable[[Augmented], ExtReal]
    probes: Tuple[Tuple[Augmented, Augmented], ...]
    derivation: str
    occupancy_fn: Optional[Callable[[Augmented], Tuple[bool, bool]]] = None
    sample_membership_fn: Optional[Callable[[Element], bool]] = None
    sample_value_fn: Optional[Callable[[Element], float]] = None

    def __post_init__(self):
        from ordext.orders import BOTTOM, TOP

        for x, x_prime in self.probes:
            if compare_augmented(self.ambient, x_prime, x) is not Comparison.STRICTLY_GREATER:
                raise ValueError(
                    f"fixture {self.name!r}: probe ({x}, {x_prime}) is not a strict pair"
                )
        if self.lower_sup(BOTTOM) != NEG_INF:
            raise ValueError(f"fixture {self.name!r}: lower_sup(Bottom) must be -inf")
        if self.upper_inf(TOP) != POS_INF:
            raise ValueError(f"fixture {self.name!r}: upper_inf(Top) must be +inf")

    @property
    def rel(self) -> Preorder:
        return self.ambient

    def lower_sup(self, x) -> ExtReal:
        return ExtReal(self.lower_sup_fn(as_augmented(x)))

    def upper_inf(self, x) -> ExtReal:
        return ExtReal(self.upper_inf_fn(as_augmented(x)))

    def contour_occupancy(self, x) -> Tuple[bool, bool]:
        if self.occupancy_fn is None:
            raise UnsupportedQueryError(
                f"fixture {self.name!r} declares no contour occupancy"
            )
        return self.occupancy_fn(as_augmented(x))

    def in_samples(self, x: Element) -> bool:
        if self.sample_membership_fn is None:
            raise UnsupportedQueryError(
                f"fixture {self.name!r} declares no sample membership test"
            )
        return self.sample_membership_fn(x)

    def sample_value(self, x: Element) -> float:
        if not self.in_samples(x):
            raise KeyError(f"{x!r} is not a sample point of fixture {self.name!r}")
        if self.sample_value_fn is None:
            raise UnsupportedQueryError(
                f"fixture {self.name!r} declares no sample values"
            )
        return self.sample_value_fn(x)
