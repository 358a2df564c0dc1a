"""Ground sets and preorders.

Two concrete ground-set flavours are supported:

* :class:`FinitePreorder` stores a closed boolean relation on indices
  ``0..n-1`` as per-row bitmasks; ``geq(i, j)`` means ``i`` is at least
  as good as ``j``.
* :class:`ParetoSpace` compares k-vectors of finite reals coordinatewise.

Both expose the same query surface through :class:`Preorder`.  The
augmented ground set adds two artificial extremes, one strictly above
and one strictly below everything, via :class:`Augmented`.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Iterator, Optional, Sequence, Tuple

Element = Any  # int for finite ground sets, tuple of floats for Pareto spaces

__all__ = [
    "Augmented",
    "BOTTOM",
    "Comparison",
    "Element",
    "FinitePreorder",
    "ForeignElementError",
    "ParetoSpace",
    "Preorder",
    "TOP",
    "UnsupportedQueryError",
    "interior",
    "is_antisymmetric",
    "is_connected",
    "is_maximal",
    "is_minimal",
    "is_pareto_set",
    "is_reflexive",
    "is_symmetric",
    "is_transitive",
]


class ForeignElementError(ValueError):
    """An element does not belong to the queried ground set."""


class UnsupportedQueryError(RuntimeError):
    """The query needs an enumerable ground set and got an infinite one."""


class Comparison(Enum):
    """Outcome of comparing two elements under a preorder."""

    EQUIVALENT = "equivalent"
    STRICTLY_GREATER = "strictly_greater"
    STRICTLY_LESS = "strictly_less"
    INCOMPARABLE = "incomparable"


class Preorder(ABC):
    """A reflexive, transitive relation ``geq`` on some ground set."""

    @abstractmethod
    def geq(self, x: Element, y: Element) -> bool:
        """True iff ``x`` is at least as good as ``y``."""

    def compare(self, x: Element, y: Element) -> Comparison:
        fwd = self.geq(x, y)
        back = self.geq(y, x)
        if fwd and back:
            return Comparison.EQUIVALENT
        if fwd:
            return Comparison.STRICTLY_GREATER
        if back:
            return Comparison.STRICTLY_LESS
        return Comparison.INCOMPARABLE

    def strictly_greater(self, x: Element, y: Element) -> bool:
        return self.geq(x, y) and not self.geq(y, x)

    def equivalent(self, x: Element, y: Element) -> bool:
        return self.geq(x, y) and self.geq(y, x)

    def iter_elements(self) -> Iterator[Element]:
        """Enumerate the ground set; only finite ground sets support this."""
        raise UnsupportedQueryError(
            f"{type(self).__name__} has no enumerable ground set"
        )


def _check_reflexive(rows: Sequence[int]) -> Optional[int]:
    for i, row in enumerate(rows):
        if not (row >> i) & 1:
            return i
    return None


def _check_transitive(rows: Sequence[int]) -> Optional[Tuple[int, int]]:
    # i >= j forces row(i) to absorb row(j); a missing bit is a witness.
    for i, row in enumerate(rows):
        rest = row
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if rows[j] & ~row:
                return (i, j)
    return None


class FinitePreorder(Preorder):
    """A preorder on ``{0, .., n-1}`` stored as a closed bitmask matrix.

    ``_rows[i]`` has bit ``j`` set iff ``geq(i, j)``; ``_cols`` is the
    transpose, used for upper-contour queries.
    """

    __slots__ = ("_n", "_rows", "_cols")

    def __init__(self, rows: Sequence[int]):
        n = len(rows)
        bad = _check_reflexive(rows)
        if bad is not None:
            raise ValueError(f"relation is not reflexive at element {bad}")
        bad = _check_transitive(rows)
        if bad is not None:
            raise ValueError(f"relation is not transitive through pair {bad}")
        self._n = n
        self._rows = tuple(rows)
        cols = [0] * n
        for i, row in enumerate(rows):
            bit = 1 << i
            for j in range(n):
                if (row >> j) & 1:
                    cols[j] |= bit
        self._cols = tuple(cols)

    @classmethod
    def closure(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> "FinitePreorder":
        """Smallest reflexive-transitive relation containing the pairs."""
        rows = [1 << i for i in range(n)]
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ForeignElementError(f"pair ({i}, {j}) out of range for n={n}")
            rows[i] |= 1 << j
        # Warshall sweep on bitmask rows: after step k, row i holds every j
        # reachable from i through intermediates <= k.
        for k in range(n):
            bit = 1 << k
            for i in range(n):
                if rows[i] & bit:
                    rows[i] |= rows[k]
        return cls(rows)

    @classmethod
    def from_geq_matrix(cls, matrix: Sequence[Sequence[bool]]) -> "FinitePreorder":
        """Validate an explicit boolean matrix (must already be closed)."""
        n = len(matrix)
        rows = []
        for row in matrix:
            if len(row) != n:
                raise ValueError("matrix is not square")
            mask = 0
            for j, cell in enumerate(row):
                if cell:
                    mask |= 1 << j
            rows.append(mask)
        return cls(rows)

    @classmethod
    def chain(cls, n: int) -> "FinitePreorder":
        """Total order 0 < 1 < .. < n-1."""
        return cls([((1 << (i + 1)) - 1) for i in range(n)])

    @classmethod
    def antichain(cls, n: int) -> "FinitePreorder":
        """Discrete order: only reflexive pairs."""
        return cls([1 << i for i in range(n)])

    @property
    def n(self) -> int:
        return self._n

    def _check(self, x: Element) -> int:
        if not (isinstance(x, int) and 0 <= x < self._n):
            raise ForeignElementError(f"{x!r} is not an index below {self._n}")
        return x

    def geq(self, x: Element, y: Element) -> bool:
        return bool((self._rows[self._check(x)] >> self._check(y)) & 1)

    def iter_elements(self) -> Iterator[int]:
        return iter(range(self._n))

    def geq_mask(self, x: int) -> int:
        """Bitmask of ``{y | x geq y}`` (the weak down-set of ``x``)."""
        return self._rows[self._check(x)]

    def leq_mask(self, x: int) -> int:
        """Bitmask of ``{y | y geq x}`` (the weak up-set of ``x``)."""
        return self._cols[self._check(x)]

    def pairs(self) -> Iterator[Tuple[int, int]]:
        """All related pairs (i, j) with geq(i, j)."""
        for i in range(self._n):
            row = self._rows[i]
            for j in range(self._n):
                if (row >> j) & 1:
                    yield (i, j)

    def equivalence_classes(self) -> list[Tuple[int, ...]]:
        """Classes of mutual domination, each sorted, ordered by least member."""
        seen = 0
        classes = []
        for i in range(self._n):
            if (seen >> i) & 1:
                continue
            mutual = self._rows[i] & self._cols[i]
            seen |= mutual
            members = tuple(j for j in range(self._n) if (mutual >> j) & 1)
            classes.append(members)
        return classes

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePreorder):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"FinitePreorder(n={self._n})"


class ParetoSpace(Preorder):
    """Coordinatewise ``>=`` on k-vectors of finite reals."""

    __slots__ = ("_k",)

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("dimension must be positive")
        self._k = k

    @property
    def k(self) -> int:
        return self._k

    def _check(self, x: Element) -> Tuple[float, ...]:
        if not isinstance(x, tuple) or len(x) != self._k:
            raise ForeignElementError(f"{x!r} is not a {self._k}-vector")
        for coord in x:
            if isinstance(coord, float) and not math.isfinite(coord):
                raise ForeignElementError(f"{x!r} has a non-finite coordinate")
        return x

    def geq(self, x: Element, y: Element) -> bool:
        x = self._check(x)
        y = self._check(y)
        return all(xi >= yi for xi, yi in zip(x, y))

    def compare(self, x: Element, y: Element) -> Comparison:
        # single coordinate pass; the default would validate and scan twice
        x = self._check(x)
        y = self._check(y)
        fwd = back = True
        for xi, yi in zip(x, y):
            if xi < yi:
                fwd = False
            elif xi > yi:
                back = False
        if fwd and back:
            return Comparison.EQUIVALENT
        if fwd:
            return Comparison.STRICTLY_GREATER
        if back:
            return Comparison.STRICTLY_LESS
        return Comparison.INCOMPARABLE

    def __repr__(self) -> str:
        return f"ParetoSpace(k={self._k})"


class _AugKind(Enum):
    BOTTOM = "bottom"
    INTERIOR = "interior"
    TOP = "top"


@dataclass(frozen=True)
class Augmented:
    """An element of the augmented ground set: Bottom, an interior point, or Top."""

    kind: _AugKind
    element: Element = None

    @property
    def is_top(self) -> bool:
        return self.kind is _AugKind.TOP

    @property
    def is_bottom(self) -> bool:
        return self.kind is _AugKind.BOTTOM

    @property
    def is_interior(self) -> bool:
        return self.kind is _AugKind.INTERIOR

    def __str__(self) -> str:
        if self.is_top:
            return "Top"
        if self.is_bottom:
            return "Bottom"
        return str(self.element)


TOP = Augmented(_AugKind.TOP)
BOTTOM = Augmented(_AugKind.BOTTOM)


def interior(x: Element) -> Augmented:
    return Augmented(_AugKind.INTERIOR, x)


def compare_augmented(rel: Preorder, x: Augmented, y: Augmented) -> Comparison:
    """Comparison on the augmented set: Top above all, Bottom below all."""
    if x.kind is y.kind and not x.is_interior:
        return Comparison.EQUIVALENT
    if x.is_top or y.is_bottom:
        return Comparison.STRICTLY_GREATER
    if x.is_bottom or y.is_top:
        return Comparison.STRICTLY_LESS
    return rel.compare(x.element, y.element)


def is_pareto_set(
    rel: Preorder, points: Iterable[Element]
) -> Tuple[bool, Optional[Tuple[Element, Element]]]:
    """True iff no point strictly dominates another; else (False, (winner, loser))."""
    pts = list(points)
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            if rel.strictly_greater(p, q):
                return False, (p, q)
            if rel.strictly_greater(q, p):
                return False, (q, p)
    return True, None


def is_maximal(rel: Preorder, x: Element) -> bool:
    """No element of the (finite) ground set strictly dominates ``x``."""
    return not any(rel.strictly_greater(y, x) for y in rel.iter_elements())


def is_minimal(rel: Preorder, x: Element) -> bool:
    """No element of the (finite) ground set is strictly below ``x``."""
    return not any(rel.strictly_greater(x, y) for y in rel.iter_elements())


# Relation audits.  A validated FinitePreorder passes the first two by
# construction; the rest classify the relation further.

def is_reflexive(rel: FinitePreorder) -> bool:
    return _check_reflexive(rel._rows) is None


def is_transitive(rel: FinitePreorder) -> bool:
    return _check_transitive(rel._rows) is None


def is_symmetric(rel: FinitePreorder) -> bool:
    return all(rel.geq(j, i) for i, j in rel.pairs())


def is_antisymmetric(rel: FinitePreorder) -> bool:
    return all(i == j or not rel.geq(j, i) for i, j in rel.pairs())


def is_connected(rel: FinitePreorder) -> bool:
    n = rel.n
    return all(
        rel.geq(i, j) or rel.geq(j, i) for i in range(n) for j in range(i + 1, n)
    )
