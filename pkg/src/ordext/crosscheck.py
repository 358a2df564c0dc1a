"""Independent verification machinery: seeded generators, a brute-force
extendability oracle, a sampling grid refuter, and exhaustive preorder
enumeration at desk scale.

Everything here deliberately avoids the contour-bound machinery it is
meant to validate; the brute oracle decides extendability by explicit
value construction over the equivalence-class condensation, then audits
its own construction.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ordext.contours import FiniteSampleOracle, PartialUtility
from ordext.monotonicity import Verdict, Witness, check_gap_safe_finite
from ordext.orders import Element, FinitePreorder, ParetoSpace
from ordext.utility import finite_utility

__all__ = [
    "InstanceSpec",
    "brute_extendability",
    "build_instance",
    "grid_refuter",
    "iter_all_preorders",
    "pm_one_assignments",
    "random_adversarial_samples",
    "random_finite_preorder",
    "random_gap_safe_samples",
]

MAX_BRUTE_SIZE = 8


@dataclass(frozen=True)
class InstanceSpec:
    """Seeded recipe for one random test instance."""

    seed: int
    n: int
    density: float
    sample_count: int
    mode: str = "utility"  # "utility" (gap-safe) or "adversarial"

    def __post_init__(self):
        if not (1 <= self.n <= MAX_BRUTE_SIZE):
            raise ValueError(f"ground-set size must be in 1..{MAX_BRUTE_SIZE}")
        if not (0.0 <= self.density <= 1.0):
            raise ValueError("density must be in [0, 1]")
        if not (0 <= self.sample_count <= self.n):
            raise ValueError("sample count must be in 0..n")
        if self.mode not in ("utility", "adversarial"):
            raise ValueError(f"unknown mode {self.mode!r}")


def random_finite_preorder(spec: InstanceSpec) -> FinitePreorder:
    """Closure of a seeded random digraph; identical per seed."""
    rng = random.Random(spec.seed)
    pairs = [
        (i, j)
        for i in range(spec.n)
        for j in range(spec.n)
        if i != j and rng.random() < spec.density
    ]
    return FinitePreorder.closure(spec.n, pairs)


def random_gap_safe_samples(
    rel: FinitePreorder, points: Sequence[int], seed: int
) -> PartialUtility:
    """Values guaranteed gap-safe: utility levels plus class-shared jitter.

    Levels of distinct comparable classes differ by at least one, so a
    jitter bounded by 1/4 keeps every strict inequality; equivalent
    points share their class jitter and stay equal.
    """
    rng = random.Random(seed)
    u = finite_utility(rel)
    offsets = {}
    for members in rel.equivalence_classes():
        offsets[members] = rng.uniform(-0.25, 0.25)
    class_of = {}
    for members in rel.equivalence_classes():
        for x in members:
            class_of[x] = members
    samples = PartialUtility(
        {p: u(p) + offsets[class_of[p]] for p in points}
    )
    verdict = check_gap_safe_finite(rel, samples)
    assert verdict.holds, "generator invariant broken: output not gap-safe"
    return samples


def random_adversarial_samples(
    rel: FinitePreorder, points: Sequence[int], seed: int
) -> PartialUtility:
    """Unconstrained small-integer values; frequently not even weakly increasing."""
    rng = random.Random(seed)
    return PartialUtility({p: float(rng.randint(-2, 2)) for p in points})


def build_instance(spec: InstanceSpec) -> Tuple[FinitePreorder, PartialUtility]:
    rel = random_finite_preorder(spec)
    rng = random.Random(spec.seed ^ 0x5EED)
    points = sorted(rng.sample(range(spec.n), spec.sample_count))
    if spec.mode == "utility":
        samples = random_gap_safe_samples(rel, points, spec.seed ^ 0xA11CE)
    else:
        samples = random_adversarial_samples(rel, points, spec.seed ^ 0xA11CE)
    return rel, samples


def brute_extendability(rel: FinitePreorder, samples: PartialUtility) -> bool:
    """Decide strict-extension existence by explicit construction.

    Works on the equivalence-class condensation: each class pinned by a
    sample must be pinned consistently, and a concrete rational value is
    assigned to every class between the values already placed below and
    the pinned values above.  The resulting total assignment is audited
    from scratch; any failure along the way means no extension exists.
    """
    if rel.n > MAX_BRUTE_SIZE:
        raise ValueError(f"brute oracle capped at {MAX_BRUTE_SIZE} elements")

    classes = rel.equivalence_classes()
    class_of = {}
    for idx, members in enumerate(classes):
        for x in members:
            class_of[x] = idx

    pinned: dict[int, Fraction] = {}
    for p, v in samples.items():
        idx = class_of[p]
        fv = Fraction(v)
        if idx in pinned and pinned[idx] != fv:
            return False
        pinned[idx] = fv

    reps = [members[0] for members in classes]
    k = len(classes)
    strictly_below: List[List[int]] = [[] for _ in range(k)]
    strictly_above_pinned: List[List[Fraction]] = [[] for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j and rel.strictly_greater(reps[i], reps[j]):
                strictly_below[i].append(j)
                if i in pinned:
                    strictly_above_pinned[j].append(pinned[i])

    # topological order of the condensation: fewer classes below first
    order = sorted(range(k), key=lambda i: len(strictly_below[i]))

    value: List[Optional[Fraction]] = [None] * k
    for i in order:
        floor = None
        for j in strictly_below[i]:
            assert value[j] is not None, "condensation order broken"
            if floor is None or value[j] > floor:
                floor = value[j]
        ceil = min(strictly_above_pinned[i], default=None)
        if i in pinned:
            v = pinned[i]
            if floor is not None and not (v > floor):
                return False
            value[i] = v
            continue
        if floor is None and ceil is None:
            value[i] = Fraction(0)
        elif floor is None:
            value[i] = ceil - 1
        elif ceil is None:
            value[i] = floor + 1
        else:
            if not (floor < ceil):
                return False
            value[i] = (floor + ceil) / 2

    # independent audit of the constructed assignment
    total = {x: value[class_of[x]] for x in range(rel.n)}
    for p, v in samples.items():
        if total[p] != Fraction(v):
            return False
    for x in range(rel.n):
        for y in range(rel.n):
            if rel.strictly_greater(y, x) and not (total[y] > total[x]):
                return False
            if rel.equivalent(y, x) and total[y] != total[x]:
                return False
    return True


def grid_refuter(
    space: ParetoSpace,
    samples: PartialUtility,
    bbox: Sequence[Tuple[float, float]],
    resolution: int,
) -> Verdict:
    """Sound sampling refuter for the gap condition in a Pareto space.

    Scans all strict pairs among grid points (sample points are added to
    the grid) for an upper infimum not exceeding a lower supremum.  A
    pass only certifies the scanned pairs.
    """
    if len(bbox) != space.k:
        raise ValueError(f"bbox has {len(bbox)} ranges for a {space.k}-dim space")
    if resolution < 1:
        raise ValueError("resolution must be positive")

    axes = []
    for lo, hi in bbox:
        if resolution == 1:
            axes.append([lo])
        else:
            step = (hi - lo) / (resolution - 1)
            axes.append([lo + step * i for i in range(resolution)])
    points = [tuple(c) for c in itertools.product(*axes)]
    seen = set(points)
    for p in samples.points:
        if p not in seen:
            points.append(p)
            seen.add(p)

    oracle = FiniteSampleOracle(space, samples)
    lows = [oracle.lower_sup(x).as_float() for x in points]
    highs = [oracle.upper_inf(x).as_float() for x in points]

    for i, x in enumerate(points):
        for j, y in enumerate(points):
            # cheap numeric screen first; order test only on candidates
            if highs[j] > lows[i] or i == j:
                continue
            if space.strictly_greater(y, x):
                return Verdict(
                    False,
                    Witness(
                        lo=x,
                        hi=y,
                        context=(
                            ("a(x)", lows[i]),
                            ("b(x')", highs[j]),
                        ),
                        note="x' strictly dominates x but b(x') <= a(x)",
                    ),
                )
    return Verdict(True)


def pm_one_assignments(points: Sequence[Element]) -> Iterator[PartialUtility]:
    """Every assignment of +1/-1 values to the given sample points."""
    for combo in itertools.product((-1.0, 1.0), repeat=len(points)):
        yield PartialUtility(dict(zip(points, combo)))


def iter_all_preorders(n: int) -> Iterator[FinitePreorder]:
    """All preorders on {0..n-1}, by filtering every off-diagonal edge set.

    Feasible up to n = 5 (about a million candidate masks); the yield
    counts match the finite-topology sequence 1, 4, 29, 355, 6942.
    """
    if not (1 <= n <= 5):
        raise ValueError("exhaustive enumeration supported for n in 1..5")
    chunk_bits = n - 1
    # per-row table: chunk of off-diagonal bits -> full row bitmask
    tables = []
    for i in range(n):
        cols = [j for j in range(n) if j != i]
        table = []
        for chunk in range(1 << chunk_bits):
            row = 1 << i
            for pos, j in enumerate(cols):
                if (chunk >> pos) & 1:
                    row |= 1 << j
            table.append(row)
        tables.append(table)

    mask_limit = 1 << (chunk_bits * n)
    chunk_mask = (1 << chunk_bits) - 1
    for mask in range(mask_limit):
        rows = [
            tables[i][(mask >> (chunk_bits * i)) & chunk_mask] for i in range(n)
        ]
        ok = True
        for i in range(n):
            ri = rows[i]
            rest = ri
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if rows[j] & ~ri:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield FinitePreorder(rows)
