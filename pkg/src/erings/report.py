"""Sampling strategies, verification reports and the law registry.

Every checked law is a plain function ``law(carrier, *inputs)`` registered
under a tag. It returns ``None`` when the law holds on those inputs (or is
vacuous there) and an ``(expected, actual)`` pair of strings otherwise.
Failures record the tag and serialized inputs, so :func:`replay` can
re-evaluate any failure without re-running its suite.
"""

from __future__ import annotations

import random
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Callable

from .carriers import Carrier, value_from_json, value_to_json

SCHEMA_VERSION = "1.0"

EXHAUSTIVE = "exhaustive"
SEEDED = "seeded"

LAWS: dict[str, Callable] = {}


def law(tag: str):
    """Register a law checker under its theorem tag."""

    def deco(fn):
        if tag in LAWS:
            raise ValueError(f"duplicate law tag {tag}")
        LAWS[tag] = fn
        fn.tag = tag
        return fn

    return deco


class StrategyError(ValueError):
    """The strategy cannot be applied to the carrier (e.g. exhaustive on matrices)."""


@dataclass(frozen=True)
class SampleStrategy:
    mode: str = SEEDED
    seed: int = 0
    case_budget: int = 500
    magnitude_bound: int = 6

    def __post_init__(self):
        if self.mode not in (EXHAUSTIVE, SEEDED):
            raise StrategyError(f"unknown mode {self.mode!r}")
        if self.case_budget < 1 or self.magnitude_bound < 1:
            raise StrategyError("budget and bound must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise StrategyError("seed must be an unsigned 64-bit integer")

    @classmethod
    def auto(cls, c: Carrier, seed: int = 0, budget: int = 500, bound: int = 6) -> "SampleStrategy":
        return cls(EXHAUSTIVE if c.enumerable_E else SEEDED, seed, budget, bound)

    def rng(self, label: str) -> random.Random:
        # string seeds hash with SHA-512, stable across processes
        return random.Random(f"{self.seed}:{label}")

    def require_compatible(self, c: Carrier):
        if self.mode == EXHAUSTIVE and not c.enumerable_E:
            raise StrategyError(f"exhaustive mode needs an enumerable carrier, got {c.kind}")

    def as_dict(self) -> dict:
        return {"mode": self.mode, "seed": self.seed, "budget": self.case_budget,
                "bound": self.magnitude_bound}


@dataclass
class Failure:
    case_id: int
    law_id: str
    inputs: list
    expected: str
    actual: str

    def as_dict(self) -> dict:
        return {"case_id": self.case_id, "law_id": self.law_id, "inputs": self.inputs,
                "expected": self.expected, "actual": self.actual}


@dataclass
class Undecided:
    case_id: int
    law_id: str
    inputs: list
    note: str

    def as_dict(self) -> dict:
        return {"case_id": self.case_id, "law_id": self.law_id, "inputs": self.inputs,
                "note": self.note}


@dataclass
class VerificationReport:
    suite_name: str
    carrier: dict
    strategy: dict
    evidence: str
    total_cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    undecided: list[Undecided] = field(default_factory=list)
    laws: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        if self.failures:
            return "fail"
        return "undecided" if self.undecided else "pass"

    def failures_for(self, law_id: str) -> list[Failure]:
        return [f for f in self.failures if f.law_id == law_id]

    def merge(self, other: "VerificationReport", prefix: str = "") -> None:
        """Append another report's cases, renumbering case ids."""
        offset = self.total_cases
        self.total_cases += other.total_cases
        for f in other.failures:
            self.failures.append(Failure(f.case_id + offset, f.law_id, f.inputs, f.expected, f.actual))
        for u in other.undecided:
            self.undecided.append(Undecided(u.case_id + offset, u.law_id, u.inputs, u.note))
        for tag, row in other.laws.items():
            mine = self.laws.setdefault(prefix + tag, {"cases": 0, "failures": 0, "undecided": 0})
            for k in mine:
                mine[k] += row[k]
        self.notes.extend(other.notes)
        if other.evidence != self.evidence:
            self.evidence = "sampled"


class Recorder:
    """Runs law checks, numbers the cases and accumulates a report."""

    def __init__(self, suite: str, c: Carrier, strategy: SampleStrategy | None, evidence: str):
        self.c = c
        self.report = VerificationReport(
            suite_name=suite,
            carrier=c.describe(),
            strategy=strategy.as_dict() if strategy else {},
            evidence=evidence,
        )
        self.report.laws = OrderedDict()

    def _row(self, tag: str) -> dict:
        return self.report.laws.setdefault(tag, {"cases": 0, "failures": 0, "undecided": 0})

    def touch(self, tag: str) -> None:
        """Make a law appear in the table even if no case reaches it."""
        self._row(tag)

    def check(self, tag: str, *inputs) -> bool:
        """Evaluate registered law ``tag`` on ``inputs``; return True when it holds."""
        outcome = LAWS[tag](self.c, *inputs)
        return self.record(tag, inputs, outcome)

    def record(self, tag: str, inputs, outcome) -> bool:
        case_id = self.report.total_cases
        self.report.total_cases += 1
        row = self._row(tag)
        row["cases"] += 1
        if outcome is None:
            return True
        expected, actual = outcome
        row["failures"] += 1
        self.report.failures.append(
            Failure(case_id, tag, value_to_json(self.c, list(inputs)), str(expected), str(actual))
        )
        return False

    def undecided(self, tag: str, inputs, note: str) -> None:
        case_id = self.report.total_cases
        self.report.total_cases += 1
        row = self._row(tag)
        row["cases"] += 1
        row["undecided"] += 1
        self.report.undecided.append(Undecided(case_id, tag, value_to_json(self.c, list(inputs)), note))

    def note(self, text: str) -> None:
        if text not in self.report.notes:
            self.report.notes.append(text)

    def done(self) -> VerificationReport:
        return self.report


def replay(c: Carrier, failure: Failure | dict) -> bool:
    """Re-evaluate a recorded failure on ``c``; True iff the law now holds."""
    if isinstance(failure, Failure):
        failure = failure.as_dict()
    fn = LAWS[failure["law_id"]]
    inputs = value_from_json(c, failure["inputs"])
    return fn(c, *inputs) is None


def holds(ok: bool, expected, actual):
    """Small helper for law bodies: None when ``ok``, else the mismatch pair."""
    return None if ok else (expected, actual)
