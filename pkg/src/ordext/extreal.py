"""Extended real line: the reals plus two infinities, totally ordered.

Conventions used throughout the package:

* ``POS_INF > x > NEG_INF`` for every finite ``x``; finite values compare
  as ordinary numbers.
* ``POS_INF + x = POS_INF`` and ``NEG_INF - x = NEG_INF`` whenever
  ``x > NEG_INF`` (resp. ``x < POS_INF``); the combination of the two
  infinities raises :class:`IndeterminateFormError` instead of producing
  a silent value.
* The supremum of an empty collection is ``NEG_INF`` and the infimum is
  ``POS_INF`` (see :func:`sup_ext` / :func:`inf_ext`), which preserves
  inclusion monotonicity of sup and inf.

Finite payloads may be ``int``, ``float`` or ``Fraction``; arithmetic and
comparisons never coerce them, so exact rational pipelines stay exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Real = Union[int, float, Fraction]

__all__ = [
    "ExtReal",
    "IndeterminateFormError",
    "NEG_INF",
    "POS_INF",
    "inf_ext",
    "sup_ext",
]


class IndeterminateFormError(ArithmeticError):
    """An operation combined the two infinities (e.g. +inf plus -inf)."""


_NEG, _FIN, _POS = -1, 0, 1


class ExtReal:
    """A point of the extended real line.

    Instances are immutable and hashable.  Construct finite values with
    :meth:`finite` (or by passing a number directly); the infinities are
    the module constants :data:`POS_INF` and :data:`NEG_INF`.
    """

    __slots__ = ("_tag", "_value")

    def __init__(self, value: Union["ExtReal", Real]):
        if isinstance(value, ExtReal):
            object.__setattr__(self, "_tag", value._tag)
            object.__setattr__(self, "_value", value._value)
            return
        if isinstance(value, float):
            if math.isnan(value):
                raise ValueError("NaN is not a point of the extended real line")
            if math.isinf(value):
                object.__setattr__(self, "_tag", _POS if value > 0 else _NEG)
                object.__setattr__(self, "_value", None)
                return
        elif not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot interpret {value!r} as an extended real")
        object.__setattr__(self, "_tag", _FIN)
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("ExtReal is immutable")

    @classmethod
    def finite(cls, value: Real) -> "ExtReal":
        """Wrap a finite number; rejects float infinities and NaN."""
        result = cls(value)
        if not result.is_finite:
            raise ValueError(f"{value!r} is not finite")
        return result

    @classmethod
    def _pos_inf(cls) -> "ExtReal":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_tag", _POS)
        object.__setattr__(obj, "_value", None)
        return obj

    @classmethod
    def _neg_inf(cls) -> "ExtReal":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_tag", _NEG)
        object.__setattr__(obj, "_value", None)
        return obj

    @property
    def is_finite(self) -> bool:
        return self._tag == _FIN

    @property
    def is_pos_inf(self) -> bool:
        return self._tag == _POS

    @property
    def is_neg_inf(self) -> bool:
        return self._tag == _NEG

    @property
    def finite_value(self) -> Real:
        """The wrapped number; raises ``ValueError`` on an infinity."""
        if self._tag != _FIN:
            raise ValueError(f"{self} has no finite value")
        return self._value

    def as_float(self) -> float:
        """Lossy float view: infinities map to IEEE infinities."""
        if self._tag == _POS:
            return math.inf
        if self._tag == _NEG:
            return -math.inf
        return float(self._value)

    @staticmethod
    def _coerce(other) -> "ExtReal":
        if isinstance(other, ExtReal):
            return other
        return ExtReal(other)

    # Comparisons implement the total order of the extended line.

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self._tag != other._tag:
            return False
        return self._tag != _FIN or self._value == other._value

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if self._tag != other._tag:
            return self._tag < other._tag
        return self._tag == _FIN and self._value < other._value

    def __le__(self, other) -> bool:
        other = self._coerce(other)
        return self == other or self < other

    def __gt__(self, other) -> bool:
        return self._coerce(other) < self

    def __ge__(self, other) -> bool:
        return self._coerce(other) <= self

    def __hash__(self) -> int:
        return hash((self._tag, self._value))

    # Arithmetic follows the stated conventions and refuses +inf + -inf.

    def __neg__(self) -> "ExtReal":
        if self._tag == _POS:
            return NEG_INF
        if self._tag == _NEG:
            return POS_INF
        return ExtReal(-self._value)

    def __add__(self, other) -> "ExtReal":
        other = self._coerce(other)
        if self._tag == _FIN and other._tag == _FIN:
            return ExtReal(self._value + other._value)
        tags = {self._tag, other._tag}
        if tags == {_POS, _NEG}:
            raise IndeterminateFormError("+inf + -inf has no value")
        return POS_INF if _POS in tags else NEG_INF

    def __radd__(self, other) -> "ExtReal":
        return self._coerce(other) + self

    def __sub__(self, other) -> "ExtReal":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ExtReal":
        return self._coerce(other) + (-self)

    def __repr__(self) -> str:
        if self._tag == _POS:
            return "ExtReal(+inf)"
        if self._tag == _NEG:
            return "ExtReal(-inf)"
        return f"ExtReal({self._value!r})"

    def __str__(self) -> str:
        if self._tag == _POS:
            return "+inf"
        if self._tag == _NEG:
            return "-inf"
        return str(self._value)


POS_INF = ExtReal._pos_inf()
NEG_INF = ExtReal._neg_inf()


def sup_ext(values: Iterable[Union[ExtReal, Real]]) -> ExtReal:
    """Supremum of a finite collection; NEG_INF when it is empty."""
    best: ExtReal | None = None
    for v in values:
        v = ExtReal._coerce(v)
        if best is None or v > best:
            best = v
    return NEG_INF if best is None else best


def inf_ext(values: Iterable[Union[ExtReal, Real]]) -> ExtReal:
    """Infimum of a finite collection; POS_INF when it is empty."""
    best: ExtReal | None = None
    for v in values:
        v = ExtReal._coerce(v)
        if best is None or v < best:
            best = v
    return POS_INF if best is None else best
