"""Command line front end: load a model file, run a suite, write a report.

Model files are JSON objects::

    {"kind": "function_ring", "atoms": [["x"], ["y"]], "values": "int"}
    {"kind": "function_ring", "atoms": [["x"], ["y"]], "values": "rat", "grid": 4}
    {"kind": "matrix", "dim": 2}
    {"kind": "product", "left": {...}, "right": {...}}

Any model may add ``"mutation": "<name>"`` to load a deliberately broken
fixture (see :mod:`erings.mutants`).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .axiom_engine import verify_ering_axioms, verify_lemma_suite
from .boolean_structure import NotABRing, verify_boolean_suite, verify_bring_suite, verify_stone_suite
from .carriers import (
    INTEGERS,
    RATIONALS,
    Carrier,
    CarrierError,
    MeasurableSpace,
    UnsupportedCarrier,
    make_function_carrier,
    make_matrix_carrier,
    product_carrier,
)
from .effect_logic import verify_effect_suite
from .mutants import MUTATIONS, mutate
from .projection_logic import verify_compression_suite, verify_omp_suite, verify_projection_suite
from .report import (
    EXHAUSTIVE,
    SCHEMA_VERSION,
    SEEDED,
    SampleStrategy,
    StrategyError,
    VerificationReport,
)

EXIT_PASS = 0
EXIT_FAILURES = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3
EXIT_CAPABILITY = 4

SUITES = {
    "axioms": verify_ering_axioms,
    "lemmas": verify_lemma_suite,
    "effects": verify_effect_suite,
    "projections": verify_projection_suite,
    "omp": verify_omp_suite,
    "compression": verify_compression_suite,
    "boolean": verify_boolean_suite,
    "bring": verify_bring_suite,
    "stone": verify_stone_suite,
}
SUITE_IDS = tuple(SUITES) + ("all",)

# raised when a suite does not apply to the carrier
CAPABILITY_ERRORS = (UnsupportedCarrier, NotABRing, StrategyError)


class ModelError(ValueError):
    """A model file that does not describe a carrier; ``where`` locates the problem."""

    def __init__(self, message: str, where: str = "$"):
        super().__init__(f"{where}: {message}")
        self.where = where


# ----------------------------------------------------------------------------
# Model files
# ----------------------------------------------------------------------------


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise ModelError(f"missing field {key!r}", where)
    return obj[key]


def _positive_int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise ModelError(f"expected a positive integer, got {v!r}", where)
    return v


def parse_model(obj, where: str = "$") -> Carrier:
    """Build a carrier from an already decoded model description."""
    if not isinstance(obj, dict):
        raise ModelError("expected an object", where)
    kind = _require(obj, "kind", where)
    if kind == "function_ring":
        atoms = _require(obj, "atoms", where)
        if not isinstance(atoms, list):
            raise ModelError("atoms must be a list of point lists", f"{where}.atoms")
        for i, block in enumerate(atoms):
            if not isinstance(block, list) or not all(isinstance(p, str) for p in block):
                raise ModelError("each atom must be a list of point names", f"{where}.atoms[{i}]")
        values = obj.get("values", "int")
        if values not in ("int", "rat"):
            raise ModelError(f"values must be 'int' or 'rat', got {values!r}", f"{where}.values")
        grid = obj.get("grid")
        if grid is not None:
            grid = _positive_int(grid, f"{where}.grid")
        try:
            space = MeasurableSpace.from_atoms(atoms)
            c = make_function_carrier(space, INTEGERS if values == "int" else RATIONALS, grid)
        except CarrierError as exc:
            raise ModelError(str(exc), f"{where}.atoms") from exc
    elif kind in ("matrix", "matrix_model"):
        c = make_matrix_carrier(_positive_int(_require(obj, "dim", where), f"{where}.dim"))
    elif kind == "product":
        left = parse_model(_require(obj, "left", where), f"{where}.left")
        right = parse_model(_require(obj, "right", where), f"{where}.right")
        c = product_carrier(left, right)
    else:
        raise ModelError(f"unknown kind {kind!r}", f"{where}.kind")
    mutation = obj.get("mutation")
    if mutation is not None:
        if mutation not in MUTATIONS:
            raise ModelError(f"unknown mutation {mutation!r}; one of {', '.join(MUTATIONS)}",
                             f"{where}.mutation")
        try:
            c = mutate(c, mutation)
        except CarrierError as exc:
            raise ModelError(str(exc), f"{where}.mutation") from exc
    return c


def load_model(path) -> Carrier:
    text = Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc
    return parse_model(obj)


# ----------------------------------------------------------------------------
# Running suites
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteRequest:
    suite: str
    strategy: SampleStrategy
    report_path: str | None = None
    fmt: str = "text"
    strict: bool = False

    def __post_init__(self):
        if self.suite not in SUITE_IDS:
            raise ValueError(f"unknown suite {self.suite!r}")


def exit_status(report: VerificationReport, strict: bool) -> int:
    if report.failures:
        return EXIT_FAILURES
    if report.undecided and strict:
        return EXIT_UNDECIDED
    return EXIT_PASS


def run_suite(req: SuiteRequest, c: Carrier) -> tuple[VerificationReport, int]:
    """Run the requested suite; capability errors propagate to the caller."""
    if req.suite != "all":
        report = SUITES[req.suite](c, req.strategy)
        return report, exit_status(report, req.strict)
    report = None
    for name, fn in SUITES.items():
        try:
            part = fn(c, req.strategy)
        except CAPABILITY_ERRORS as exc:
            if report is not None:
                report.notes.append(f"{name}: skipped ({exc})")
            continue
        if report is None:
            report = part
            report.suite_name = "all"
        else:
            report.merge(part)
    if report is None:
        raise UnsupportedCarrier("no suite applies to this carrier")
    return report, exit_status(report, req.strict)


# ----------------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------------


def _law_verdict(row: dict) -> str:
    if row["failures"]:
        return "fail"
    return "undecided" if row["undecided"] else "pass"


def report_dict(report: VerificationReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "model": report.carrier,
        "suite": report.suite_name,
        "strategy": report.strategy,
        "evidence": report.evidence,
        "cases_total": report.total_cases,
        "failures": [f.as_dict() for f in report.failures],
        "undecided": [u.as_dict() for u in report.undecided],
        "laws": {tag: dict(row, verdict=_law_verdict(row)) for tag, row in report.laws.items()},
        "notes": list(report.notes),
        "verdict": report.verdict,
    }


def format_json(report: VerificationReport) -> str:
    return json.dumps(report_dict(report), indent=2) + "\n"


def format_text(report: VerificationReport, max_failures: int = 20) -> str:
    d = report_dict(report)
    lines = [
        f"suite: {d['suite']}",
        f"model: {json.dumps(d['model'])}",
        f"strategy: {json.dumps(d['strategy'])} ({d['evidence']})",
        f"cases: {d['cases_total']}",
        f"{len(d['failures'])} failures, {len(d['undecided'])} undecided",
        f"verdict: {d['verdict']}",
        "",
    ]
    width = max([len(tag) for tag in d["laws"]] + [3])
    lines.append(f"{'law'.ljust(width)}  {'cases':>6}  verdict")
    for tag, row in d["laws"].items():
        lines.append(f"{tag.ljust(width)}  {row['cases']:>6}  {row['verdict']}")
    if d["failures"]:
        lines += ["", "failures:"]
        for f in d["failures"][:max_failures]:
            lines.append(f"  case {f['case_id']} [{f['law_id']}] inputs={json.dumps(f['inputs'])}")
            lines.append(f"    expected: {f['expected']}")
            lines.append(f"    actual:   {f['actual']}")
        if len(d["failures"]) > max_failures:
            lines.append(f"  ... {len(d['failures']) - max_failures} more")
    if d["undecided"]:
        lines += ["", "undecided:"]
        for u in d["undecided"][:max_failures]:
            lines.append(f"  case {u['case_id']} [{u['law_id']}] {u['note']}")
    if d["notes"]:
        lines += ["", "notes:"] + [f"  {n}" for n in d["notes"]]
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, fmt: str = "text", path=None) -> str:
    """Render ``report``; write it atomically to ``path`` when given."""
    if fmt not in ("text", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    body = format_json(report) if fmt == "json" else format_text(report)
    if path is not None:
        target = Path(path)
        fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(body)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    return body


# ----------------------------------------------------------------------------
# Entry point
# ----------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="erings", description="Verify e-ring models against their laws.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    v = sub.add_parser("verify", help="run a verification suite on a model file")
    v.add_argument("--model", required=True, help="JSON model file")
    v.add_argument("--suite", required=True, choices=SUITE_IDS)
    v.add_argument("--seed", type=_u64, default=0)
    v.add_argument("--budget", type=_positive, default=500)
    v.add_argument("--bound", type=_positive, default=6)
    v.add_argument("--mode", choices=("auto", EXHAUSTIVE, SEEDED), default="auto",
                   help="auto picks exhaustive when E is finite")
    v.add_argument("--strict", action="store_true", help="treat undecided cases as failing")
    v.add_argument("--report", help="write the report here instead of stdout")
    v.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_parser("suites", help="list suite ids")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "suites":
        print("\n".join(SUITE_IDS))
        return EXIT_PASS
    try:
        c = load_model(args.model)
    except OSError as exc:
        print(f"cannot read model: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelError as exc:
        print(f"invalid model: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.mode == "auto":
            strategy = SampleStrategy.auto(c, args.seed, args.budget, args.bound)
        else:
            strategy = SampleStrategy(args.mode, args.seed, args.budget, args.bound)
        req = SuiteRequest(args.suite, strategy, args.report, args.format, args.strict)
        report, status = run_suite(req, c)
    except CAPABILITY_ERRORS as exc:
        print(f"suite {args.suite} does not apply: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    try:
        body = emit_report(report, args.format, args.report)
    except OSError as exc:
        print(f"cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.report is None:
        sys.stdout.write(body)
    else:
        print(f"{report.verdict}: {len(report.failures)} failures, "
              f"{len(report.undecided)} undecided, {report.total_cases} cases -> {args.report}")
    return status


if __name__ == "__main__":
    sys.exit(main())
