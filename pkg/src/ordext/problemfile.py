"""Problem-file parsing, validation, and serialization.

A problem file is one JSON document.  Keys are order-insensitive and
unknown keys are rejected so typos surface as errors, not silence.

::

    {
      "space": {"kind": "finite",
                "elements": ["low", "mid", "high"],
                "geq": [["mid", "low"], ["high", "mid"]]},
      "samples": [{"element": "low", "value": 0.0},
                  {"element": "high", "value": 1.0}],
      "alpha": 0.0,
      "beta": 1.0
    }

A ``geq`` pair ``[x, y]`` declares x above y; the relation stored is the
reflexive-transitive closure.  Pareto spaces use
``{"kind": "pareto", "dimension": 2}`` with samples keyed by ``point``
(an array of decimals), and may carry a ``base_utility`` of
``{"kind": "weighted-sum", "weights": [...]}``.  A fixture document is
just ``{"space": {"kind": "fixture", "name": "example-gap"}}``; fixtures
carry their own sample structure and support diagnosis only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Any, List, Optional, Sequence, Tuple

from ordext.contours import AnalyticFixture, FiniteSampleOracle, PartialUtility
from ordext.extension import ExtensionEngine, make_engine
from ordext.fixtures import FIXTURE_NAMES, get_fixture
from ordext.orders import Element, FinitePreorder, ParetoSpace, UnsupportedQueryError
from ordext.utility import pareto_base_utility

__all__ = [
    "ProblemFileError",
    "ProblemInstance",
    "parse_base_utility_flag",
    "parse_problem",
    "parse_queries",
    "serialize_problem",
]


class ProblemFileError(ValueError):
    """Rejection carrying a dotted location into the document."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


def _as_object(value, location):
    if not isinstance(value, dict):
        raise ProblemFileError(location, "expected an object")
    return value


def _known_keys(obj, allowed, location):
    for key in obj:
        if key not in allowed:
            raise ProblemFileError(
                f"{location}.{key}", f"unknown key (allowed: {', '.join(sorted(allowed))})"
            )


def _as_number(value, location):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProblemFileError(location, "expected a number")
    value = float(value)
    if value != value or value in (float("inf"), float("-inf")):
        raise ProblemFileError(location, "expected a finite number")
    return value


@dataclass(frozen=True)
class ProblemInstance:
    """A validated problem file, normalized for value comparison."""

    kind: str  # "finite" | "pareto" | "fixture"
    alpha: float = 0.0
    beta: float = 1.0
    element_names: Tuple[str, ...] = ()
    geq_pairs: Tuple[Tuple[str, str], ...] = ()
    dimension: int = 0
    fixture_name: str = ""
    samples: Tuple[Tuple[Any, float], ...] = ()
    base_utility: Optional[Tuple[Any, ...]] = None  # ("levels",) | ("weighted-sum", weights)

    def relation(self):
        if self.kind == "finite":
            index = {name: i for i, name in enumerate(self.element_names)}
            pairs = [(index[hi], index[lo]) for hi, lo in self.geq_pairs]
            return FinitePreorder.closure(len(self.element_names), pairs)
        if self.kind == "pareto":
            return ParetoSpace(self.dimension)
        return self.fixture().ambient

    def fixture(self) -> AnalyticFixture:
        if self.kind != "fixture":
            raise UnsupportedQueryError("not a fixture instance")
        return get_fixture(self.fixture_name)

    def sample_utility(self) -> PartialUtility:
        """Samples keyed by engine-level elements (indices or tuples)."""
        if self.kind == "fixture":
            raise UnsupportedQueryError("fixtures carry their own sample structure")
        if self.kind == "finite":
            index = {name: i for i, name in enumerate(self.element_names)}
            return PartialUtility({index[name]: v for name, v in self.samples})
        return PartialUtility(dict(self.samples))

    def element_label(self, x: Element) -> str:
        if self.kind == "finite":
            return self.element_names[x]
        if isinstance(x, tuple):
            # compact, space-free form so table columns stay splittable
            return "(" + ",".join(repr(c) for c in x) + ")"
        return repr(x)

    def to_engine(self) -> ExtensionEngine:
        if self.kind == "fixture":
            raise UnsupportedQueryError(
                "fixture instances support diagnosis only; no engine is built"
            )
        rel = self.relation()
        oracle = FiniteSampleOracle(rel, self.sample_utility())
        base = None
        if self.base_utility is not None and self.base_utility[0] == "weighted-sum":
            base = pareto_base_utility(rel, self.base_utility[1])
        return make_engine(oracle, alpha=self.alpha, beta=self.beta, base_utility=base)

    def with_range(self, alpha: Optional[float], beta: Optional[float]) -> "ProblemInstance":
        new_alpha = self.alpha if alpha is None else alpha
        new_beta = self.beta if beta is None else beta
        if not new_alpha < new_beta:
            raise ProblemFileError(
                "alpha", f"alpha must be below beta (got {new_alpha} >= {new_beta})"
            )
        return replace(self, alpha=new_alpha, beta=new_beta)

    def with_base_utility(self, descriptor) -> "ProblemInstance":
        _validate_base(descriptor, self.kind, self.dimension, "base_utility")
        return replace(self, base_utility=descriptor)


def _validate_base(descriptor, kind, dimension, location):
    if descriptor is None:
        return
    if descriptor[0] == "levels":
        if kind != "finite":
            raise ProblemFileError(location, "levels utility applies to finite relations only")
    elif descriptor[0] == "weighted-sum":
        if kind != "pareto":
            raise ProblemFileError(location, "weighted-sum utility applies to pareto spaces only")
        weights = descriptor[1]
        if len(weights) != dimension:
            raise ProblemFileError(
                f"{location}.weights", f"expected {dimension} weights, got {len(weights)}"
            )
        if any(w <= 0 for w in weights):
            raise ProblemFileError(f"{location}.weights", "weights must be positive")
    else:
        raise ProblemFileError(
            f"{location}.kind", "expected 'levels' or 'weighted-sum'"
        )


def _parse_space(doc):
    space = _as_object(doc.get("space"), "space")
    kind = space.get("kind")
    if kind == "finite":
        _known_keys(space, {"kind", "elements", "geq"}, "space")
        names = space.get("elements")
        if not isinstance(names, list) or not names:
            raise ProblemFileError("space.elements", "expected a non-empty array of names")
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise ProblemFileError(f"space.elements[{i}]", "expected a non-empty string")
        if len(set(names)) != len(names):
            raise ProblemFileError("space.elements", "element names must be unique")
        pairs = []
        raw_pairs = space.get("geq", [])
        if not isinstance(raw_pairs, list):
            raise ProblemFileError("space.geq", "expected an array of [above, below] pairs")
        for i, pair in enumerate(raw_pairs):
            loc = f"space.geq[{i}]"
            if not (isinstance(pair, list) and len(pair) == 2):
                raise ProblemFileError(loc, "expected a [above, below] pair")
            for name in pair:
                if name not in names:
                    raise ProblemFileError(loc, f"unknown element {name!r}")
            pairs.append((pair[0], pair[1]))
        return {"kind": "finite", "element_names": tuple(names), "geq_pairs": tuple(pairs)}
    if kind == "pareto":
        _known_keys(space, {"kind", "dimension"}, "space")
        dim = space.get("dimension")
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
            raise ProblemFileError("space.dimension", "expected a positive integer")
        return {"kind": "pareto", "dimension": dim}
    if kind == "fixture":
        _known_keys(space, {"kind", "name"}, "space")
        name = space.get("name")
        if name not in FIXTURE_NAMES:
            raise ProblemFileError(
                "space.name", f"unknown fixture (available: {', '.join(FIXTURE_NAMES)})"
            )
        return {"kind": "fixture", "fixture_name": name}
    raise ProblemFileError("space.kind", "expected 'finite', 'pareto', or 'fixture'")


def _parse_samples(doc, kind, element_names, dimension):
    raw = doc.get("samples", [])
    if not isinstance(raw, list):
        raise ProblemFileError("samples", "expected an array of sample entries")
    seen = set()
    out = []
    for i, entry in enumerate(raw):
        loc = f"samples[{i}]"
        entry = _as_object(entry, loc)
        value = _as_number(entry.get("value"), f"{loc}.value")
        if kind == "finite":
            _known_keys(entry, {"element", "value"}, loc)
            name = entry.get("element")
            if name not in element_names:
                raise ProblemFileError(f"{loc}.element", f"unknown element {name!r}")
            key = name
        else:
            _known_keys(entry, {"point", "value"}, loc)
            point = entry.get("point")
            if not (isinstance(point, list) and len(point) == dimension):
                raise ProblemFileError(
                    f"{loc}.point", f"expected an array of {dimension} decimals"
                )
            key = tuple(
                _as_number(c, f"{loc}.point[{j}]") for j, c in enumerate(point)
            )
        if key in seen:
            raise ProblemFileError(loc, f"duplicate sample for {key!r}")
        seen.add(key)
        out.append((key, value))
    return tuple(sorted(out, key=lambda kv: repr(kv[0])))


def _parse_base_descriptor(doc, kind, dimension):
    raw = doc.get("base_utility")
    if raw is None:
        return None
    obj = _as_object(raw, "base_utility")
    base_kind = obj.get("kind")
    if base_kind == "levels":
        _known_keys(obj, {"kind"}, "base_utility")
        descriptor = ("levels",)
    elif base_kind == "weighted-sum":
        _known_keys(obj, {"kind", "weights"}, "base_utility")
        weights = obj.get("weights")
        if not isinstance(weights, list) or not weights:
            raise ProblemFileError("base_utility.weights", "expected a non-empty array")
        descriptor = (
            "weighted-sum",
            tuple(
                _as_number(w, f"base_utility.weights[{i}]")
                for i, w in enumerate(weights)
            ),
        )
    else:
        descriptor = (base_kind,)
    _validate_base(descriptor, kind, dimension, "base_utility")
    return descriptor


def parse_problem(text: str) -> ProblemInstance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError("$", f"not valid JSON: {exc}") from exc
    doc = _as_object(doc, "$")
    space = _parse_space(doc)
    kind = space["kind"]
    if kind == "fixture":
        _known_keys(doc, {"space"}, "$")
        return ProblemInstance(kind="fixture", fixture_name=space["fixture_name"])
    _known_keys(doc, {"space", "samples", "alpha", "beta", "base_utility"}, "$")
    alpha = _as_number(doc.get("alpha", 0.0), "alpha")
    beta = _as_number(doc.get("beta", 1.0), "beta")
    if not alpha < beta:
        raise ProblemFileError("alpha", f"alpha must be below beta (got {alpha} >= {beta})")
    samples = _parse_samples(
        doc, kind, space.get("element_names", ()), space.get("dimension", 0)
    )
    base = _parse_base_descriptor(doc, kind, space.get("dimension", 0))
    return ProblemInstance(
        kind=kind,
        alpha=alpha,
        beta=beta,
        element_names=space.get("element_names", ()),
        geq_pairs=space.get("geq_pairs", ()),
        dimension=space.get("dimension", 0),
        samples=samples,
        base_utility=base,
    )


def serialize_problem(inst: ProblemInstance) -> str:
    """Canonical JSON; parsing it back yields an equal instance."""
    if inst.kind == "fixture":
        doc = {"space": {"kind": "fixture", "name": inst.fixture_name}}
        return json.dumps(doc, indent=2, sort_keys=True)
    if inst.kind == "finite":
        space = {
            "kind": "finite",
            "elements": list(inst.element_names),
            "geq": [list(p) for p in inst.geq_pairs],
        }
        samples = [
            {"element": name, "value": value} for name, value in inst.samples
        ]
    else:
        space = {"kind": "pareto", "dimension": inst.dimension}
        samples = [
            {"point": list(point), "value": value} for point, value in inst.samples
        ]
    doc = {
        "space": space,
        "samples": samples,
        "alpha": inst.alpha,
        "beta": inst.beta,
    }
    if inst.base_utility is not None:
        if inst.base_utility[0] == "levels":
            doc["base_utility"] = {"kind": "levels"}
        else:
            doc["base_utility"] = {
                "kind": "weighted-sum",
                "weights": list(inst.base_utility[1]),
            }
    return json.dumps(doc, indent=2, sort_keys=True)


def parse_queries(text: str, inst: ProblemInstance) -> List[Element]:
    """A queries file is a JSON array of element names or coordinate arrays."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError("$", f"not valid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise ProblemFileError("$", "expected an array of queries")
    out: List[Element] = []
    for i, entry in enumerate(doc):
        loc = f"[{i}]"
        if inst.kind == "finite":
            if entry not in inst.element_names:
                raise ProblemFileError(loc, f"unknown element {entry!r}")
            out.append(inst.element_names.index(entry))
        elif inst.kind == "pareto":
            if not (isinstance(entry, list) and len(entry) == inst.dimension):
                raise ProblemFileError(
                    loc, f"expected an array of {inst.dimension} decimals"
                )
            out.append(
                tuple(_as_number(c, f"{loc}[{j}]") for j, c in enumerate(entry))
            )
        else:
            raise ProblemFileError(loc, "fixture instances take no queries")
    return out


def parse_base_utility_flag(flag: str, inst: ProblemInstance) -> ProblemInstance:
    """Accepts 'levels' or 'weighted-sum:w1,w2,...' from the command line."""
    if flag == "levels":
        descriptor = ("levels",)
    elif flag.startswith("weighted-sum:"):
        body = flag[len("weighted-sum:"):]
        try:
            weights = tuple(float(w) for w in body.split(","))
        except ValueError as exc:
            raise ProblemFileError("base_utility.weights", f"bad weight list {body!r}") from exc
        descriptor = ("weighted-sum", weights)
    else:
        raise ProblemFileError(
            "base_utility", f"expected 'levels' or 'weighted-sum:...', got {flag!r}"
        )
    return inst.with_base_utility(descriptor)
