"""Command line front end.

Subcommands: ``check`` (diagnosis with witnesses), ``extend`` (extension
values at query points), ``regions`` (contour bounds and region labels),
``grid`` (CSV export over a 2-D box).  Exit codes: 0 when gap-safe (or
the report succeeded), 1 when the instance is diagnosed non-extendable,
2 for invalid input.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from ordext.monotonicity import (
    Verdict,
    Witness,
    check_gap_safe_finite,
    check_gap_safe_pareto,
    check_gap_safe_probes,
    check_strictly_increasing,
    check_weakly_increasing,
)
from ordext.orders import Augmented, UnsupportedQueryError
from ordext.problemfile import (
    ProblemFileError,
    ProblemInstance,
    parse_base_utility_flag,
    parse_problem,
    parse_queries,
)

EXIT_OK = 0
EXIT_NOT_EXTENDABLE = 1
EXIT_INVALID = 2


def _show(inst: ProblemInstance, x) -> str:
    if isinstance(x, Augmented):
        if not x.is_interior:
            return str(x)
        x = x.element
    return inst.element_label(x)


def _witness_text(inst: ProblemInstance, w: Witness) -> str:
    parts = [f"x={_show(inst, w.lo)}", f"x'={_show(inst, w.hi)}"]
    parts.extend(f"{label}={value}" for label, value in w.context)
    text = ", ".join(parts)
    return f"{text} ({w.note})" if w.note else text


def _verdict_line(inst: ProblemInstance, title: str, verdict: Verdict) -> None:
    print(f"{title}: {'yes' if verdict.holds else 'NO'}")
    if not verdict.holds:
        print(f"  witness: {_witness_text(inst, verdict.witness)}")


def _gap_verdict(inst: ProblemInstance) -> Verdict:
    rel = inst.relation()
    samples = inst.sample_utility()
    if inst.kind == "finite":
        return check_gap_safe_finite(rel, samples)
    return check_gap_safe_pareto(rel, samples)


def cmd_check(inst: ProblemInstance) -> int:
    if inst.kind == "fixture":
        fixture = inst.fixture()
        print(f"fixture {fixture.name}: probing {len(fixture.probes)} strict pairs")
        verdict = check_gap_safe_probes(fixture, fixture.probes)
        if verdict.holds:
            print("gap-safe increasing: no violation among the supplied probes")
            return EXIT_OK
        _verdict_line(inst, "gap-safe increasing", verdict)
        print("not extendable: no strictly increasing total extension exists")
        return EXIT_NOT_EXTENDABLE

    rel = inst.relation()
    samples = inst.sample_utility()
    _verdict_line(inst, "weakly increasing", check_weakly_increasing(rel, samples))
    _verdict_line(inst, "strictly increasing", check_strictly_increasing(rel, samples))
    gap = _gap_verdict(inst)
    _verdict_line(inst, "gap-safe increasing", gap)
    if gap.holds:
        print("extendable: a strictly increasing total extension exists")
        return EXIT_OK
    print("not extendable: no strictly increasing total extension exists")
    return EXIT_NOT_EXTENDABLE


def _refuse_if_not_gap_safe(inst: ProblemInstance) -> Optional[int]:
    gap = _gap_verdict(inst)
    if gap.holds:
        return None
    print("refusing: instance is not gap-safe increasing", file=sys.stderr)
    print(f"  witness: {_witness_text(inst, gap.witness)}", file=sys.stderr)
    return EXIT_NOT_EXTENDABLE


def _print_table(header: Sequence[str], rows: List[Sequence[str]]) -> None:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    for line in [header] + rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())


def cmd_extend(inst: ProblemInstance, queries: List) -> int:
    refusal = _refuse_if_not_gap_safe(inst)
    if refusal is not None:
        return refusal
    engine = inst.to_engine()
    rows = []
    for x in queries:
        values = engine.evaluate_all_forms(x)
        region = engine.classify_contour_region(x)
        bands = "|".join(band.value for band in engine.classify_bands(x))
        rows.append(
            (_show(inst, x), format(values[0], ".12g"), region.value, bands)
        )
    _print_table(("x", "f", "region", "bands"), rows)
    return EXIT_OK


def cmd_regions(inst: ProblemInstance, queries: List) -> int:
    engine = inst.to_engine()
    rows = []
    for x in queries:
        a, b = engine.bounds(x)
        region = engine.classify_contour_region(x)
        bands = "|".join(band.value for band in engine.classify_bands(x))
        rows.append((_show(inst, x), str(a), str(b), region.value, bands))
    _print_table(("x", "a", "b", "region", "bands"), rows)
    return EXIT_OK


def _parse_bbox(text: str) -> Tuple[Tuple[float, float], Tuple[float, float]]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ProblemFileError("bbox", "expected x1,y1,x2,y2")
    try:
        x1, y1, x2, y2 = (float(p) for p in parts)
    except ValueError as exc:
        raise ProblemFileError("bbox", f"bad number in {text!r}") from exc
    if not (x1 <= x2 and y1 <= y2):
        raise ProblemFileError("bbox", "corner (x1,y1) must not exceed (x2,y2)")
    return (x1, x2), (y1, y2)


def _axis(lo: float, hi: float, resolution: int) -> List[float]:
    if resolution == 1:
        return [lo]
    step = (hi - lo) / (resolution - 1)
    return [lo + step * i for i in range(resolution)]


def cmd_grid(inst: ProblemInstance, bbox: str, resolution: int, out: str) -> int:
    if inst.kind != "pareto" or inst.dimension != 2:
        raise ProblemFileError(
            "space", "grid export needs a pareto space of dimension 2"
        )
    if resolution < 1:
        raise ProblemFileError("resolution", "must be a positive integer")
    (x_lo, x_hi), (y_lo, y_hi) = _parse_bbox(bbox)
    refusal = _refuse_if_not_gap_safe(inst)
    if refusal is not None:
        return refusal
    engine = inst.to_engine()
    count = 0
    with open(out, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["x1", "x2", "f", "alun", "s_labels"])
        for v1 in _axis(x_lo, x_hi, resolution):
            for v2 in _axis(y_lo, y_hi, resolution):
                point = (v1, v2)
                value = engine.evaluate(point)
                region = engine.classify_contour_region(point)
                bands = "|".join(band.value for band in engine.classify_bands(point))
                writer.writerow([repr(v1), repr(v2), repr(value), region.value, bands])
                count += 1
    print(f"wrote {count} rows to {out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordext",
        description="Diagnose and evaluate strictly increasing extensions "
        "of partial functions on preordered sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="diagnose extendability with witnesses")
    p_check.add_argument("file", help="problem file (JSON)")

    def add_engine_flags(p):
        p.add_argument("file", help="problem file (JSON)")
        p.add_argument("--alpha", type=float, default=None, help="override range lower bound")
        p.add_argument("--beta", type=float, default=None, help="override range upper bound")
        p.add_argument(
            "--base-utility",
            dest="base_utility",
            default=None,
            metavar="SPEC",
            help="'levels' or 'weighted-sum:w1,w2,...'",
        )

    p_extend = sub.add_parser("extend", help="evaluate the extension at query points")
    add_engine_flags(p_extend)
    p_extend.add_argument("--queries", required=True, help="JSON array of query points")

    p_regions = sub.add_parser("regions", help="report contour bounds and region labels")
    add_engine_flags(p_regions)
    p_regions.add_argument("--queries", required=True, help="JSON array of query points")

    p_grid = sub.add_parser("grid", help="export a CSV grid over a 2-D box")
    add_engine_flags(p_grid)
    p_grid.add_argument("--bbox", required=True, help="x1,y1,x2,y2 box corners")
    p_grid.add_argument("--resolution", type=int, default=20, help="points per axis")
    p_grid.add_argument("--out", required=True, help="output CSV path")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inst = parse_problem(Path(args.file).read_text())
        if args.command == "check":
            return cmd_check(inst)
        inst = inst.with_range(args.alpha, args.beta)
        if args.base_utility is not None:
            inst = parse_base_utility_flag(args.base_utility, inst)
        if args.command == "extend":
            queries = parse_queries(Path(args.queries).read_text(), inst)
            return cmd_extend(inst, queries)
        if args.command == "regions":
            queries = parse_queries(Path(args.queries).read_text(), inst)
            return cmd_regions(inst, queries)
        return cmd_grid(inst, args.bbox, args.resolution, args.out)
    except ProblemFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UnsupportedQueryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
