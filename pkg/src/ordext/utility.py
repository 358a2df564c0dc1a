"""Utility representations of the ambient preorder and range squashing.

A utility representation is a total, strictly increasing map from the
ground set to the reals: equivalent elements share a value, strictly
dominating elements get strictly more.  The extension engine consumes a
representation with values strictly inside a chosen interval (alpha,
beta), produced here by an arctan squash, plus its normalization to
(0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple

from ordext.orders import Element, FinitePreorder, ParetoSpace

__all__ = [
    "UtilityFn",
    "UtilityKind",
    "finite_utility",
    "normalize01",
    "pareto_base_utility",
    "squash",
]


class UtilityKind(Enum):
    BASE = "base"
    SQUASHED = "squashed"
    NORMALIZED01 = "normalized01"


@dataclass(frozen=True)
class UtilityFn:
    """A total utility map with provenance metadata.

    ``lo``/``hi`` record the declared open range for squashed and
    normalized variants; base utilities carry no range promise.
    """

    fn: Callable[[Element], float]
    kind: UtilityKind
    lo: Optional[float] = None
    hi: Optional[float] = None

    def __call__(self, x: Element) -> float:
        return self.fn(x)


def finite_utility(rel: FinitePreorder) -> UtilityFn:
    """Integer-valued utility for a finite preorder.

    Equivalence classes collapse to single nodes; each class is valued
    by the length of the longest chain of strict dominations below it.
    Equivalent elements therefore share a value by construction, and a
    strictly dominated class sits strictly lower.
    """
    classes = rel.equivalence_classes()
    class_of = {}
    for idx, members in enumerate(classes):
        for x in members:
            class_of[x] = idx
    reps = [members[0] for members in classes]

    below: list[list[int]] = [[] for _ in classes]
    for i, ri in enumerate(reps):
        for j, rj in enumerate(reps):
            if i != j and rel.strictly_greater(ri, rj):
                below[i].append(j)

    level: list[Optional[int]] = [None] * len(classes)

    def resolve(i: int) -> int:
        if level[i] is None:
            level[i] = 0 if not below[i] else 1 + max(resolve(j) for j in below[i])
        return level[i]

    for i in range(len(classes)):
        resolve(i)

    values = {x: float(level[class_of[x]]) for x in range(rel.n)}
    return UtilityFn(fn=values.__getitem__, kind=UtilityKind.BASE)


def pareto_base_utility(
    space: ParetoSpace, weights: Optional[Sequence[float]] = None
) -> UtilityFn:
    """Weighted coordinate sum; strictly increasing in every coordinate."""
    if weights is None:
        weights = (1.0,) * space.k
    weights = tuple(float(w) for w in weights)
    if len(weights) != space.k:
        raise ValueError(f"expected {space.k} weights, got {len(weights)}")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be strictly positive")

    def fn(x: Tuple[float, ...]) -> float:
        return sum(w * xi for w, xi in zip(weights, x))

    return UtilityFn(fn=fn, kind=UtilityKind.BASE)


def squash(u: UtilityFn, alpha: float, beta: float) -> UtilityFn:
    """Compress a utility's range strictly inside (alpha, beta) via arctan.

    Strictly increasing in exact arithmetic.  Under IEEE doubles, inputs
    closer together than the local arctan resolution can round to the
    same output, so callers needing strictness must keep their base
    utility values resolvably spaced (integer-valued utilities are).
    """
    if not (alpha < beta):
        raise ValueError(f"need alpha < beta, got {alpha} >= {beta}")
    span = beta - alpha

    def fn(x: Element) -> float:
        out = span / math.pi * (math.atan(u(x)) + math.pi / 2) + alpha
        # atan saturates for huge inputs; keep the open-interval promise.
        if out >= beta:
            out = math.nextafter(beta, alpha)
        elif out <= alpha:
            out = math.nextafter(alpha, beta)
        return out

    return UtilityFn(fn=fn, kind=UtilityKind.SQUASHED, lo=alpha, hi=beta)


def normalize01(u_ab: UtilityFn, alpha: float, beta: float) -> UtilityFn:
    """Affine rescale of a squashed utility from (alpha, beta) onto (0, 1)."""
    if u_ab.kind is not UtilityKind.SQUASHED:
        raise ValueError(f"expected a squashed utility, got {u_ab.kind.value}")
    if (u_ab.lo, u_ab.hi) != (alpha, beta):
        raise ValueError(
            f"utility was squashed into ({u_ab.lo}, {u_ab.hi}), not ({alpha}, {beta})"
        )
    span = beta - alpha

    def fn(x: Element) -> float:
        return (u_ab(x) - alpha) / span

    return UtilityFn(fn=fn, kind=UtilityKind.NORMALIZED01, lo=0.0, hi=1.0)
