"""Enumeration sweeps that cross-validate the closed forms against brute force.

Systems are enumerated in lexicographic order of (c2, ..., cn), every one is
judged by the dynamic-programming oracle and by the method under comparison
(closed-form rules or Pearson's test), and disagreements are collected.  A
finished sweep with an empty mismatch list is the machine-checked statement
that the closed forms are exact over the enumerated range.
"""

from __future__ import annotations

import itertools
import json
import math
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Iterator

from .canonicity import is_canonical_bruteforce, is_canonical_pearson
from .characterization import characterize
from .core import CoinSystem
from .errors import InvalidSpecError, IoFailureError

FILTERS = ("all", "canonical_only", "family_only")
METHODS = ("closed", "pearson")


@dataclass(frozen=True)
class EnumerationSpec:
    """Bounds of a sweep: system size n, cap on c_n, optional filter."""

    n: int
    max_denomination: int
    filter: str = "all"

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpecError(f"system size must be positive, got {self.n}")
        if self.max_denomination < self.n:
            raise InvalidSpecError(
                f"bound {self.max_denomination} < {self.n}: no strictly increasing system exists"
            )
        if self.filter not in FILTERS:
            raise InvalidSpecError(f"unknown filter {self.filter!r}, expected one of {FILTERS}")

    def to_dict(self) -> dict:
        return {"n": self.n, "max_denomination": self.max_denomination, "filter": self.filter}


@dataclass
class ValidationReport:
    """Outcome of one sweep; `records` holds one row per enumerated system."""

    spec: EnumerationSpec
    method: str
    total_systems: int
    canonical_count: int
    mismatches: list[dict]
    elapsed: float
    records: list[tuple]  # (denominations, canonical, min_counterexample, rule)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "method": self.method,
            "total_systems": self.total_systems,
            "canonical_count": self.canonical_count,
            "mismatches": self.mismatches,
            "elapsed": self.elapsed,
            "records": [
                {
                    "system": list(denoms),
                    "canonical": canonical,
                    "min_counterexample": min_cx,
                    "rule": rule,
                }
                for denoms, canonical, min_cx, rule in self.records
            ],
        }


def report_from_dict(d: dict) -> ValidationReport:
    return ValidationReport(
        spec=EnumerationSpec(**d["spec"]),
        method=d["method"],
        total_systems=d["total_systems"],
        canonical_count=d["canonical_count"],
        mismatches=list(d["mismatches"]),
        elapsed=d["elapsed"],
        records=[
            (tuple(r["system"]), r["canonical"], r["min_counterexample"], r["rule"])
            for r in d["records"]
        ],
    )


def _raw_systems(spec: EnumerationSpec) -> Iterator[CoinSystem]:
    for rest in itertools.combinations(range(2, spec.max_denomination + 1), spec.n - 1):
        yield CoinSystem((1,) + rest)


def _passes_filter(spec: EnumerationSpec, system: CoinSystem) -> bool:
    if spec.filter == "all":
        return True
    if spec.filter == "canonical_only":
        return is_canonical_bruteforce(system).canonical
    d = system.denominations  # family_only: c_n = 2*c_{n-1} - c2
    return system.n >= 3 and d[-1] == 2 * d[-2] - d[1]


def enumerate_systems(spec: EnumerationSpec) -> Iterator[CoinSystem]:
    """Yield every system within the spec, lexicographic in (c2, ..., cn)."""
    for system in _raw_systems(spec):
        if _passes_filter(spec, system):
            yield system


def _validate_chunk(spec: EnumerationSpec, method: str, start: int, stop: int):
    records = []
    mismatches = []
    canonical_count = 0
    total = 0
    for system in itertools.islice(_raw_systems(spec), start, stop):
        if not _passes_filter(spec, system):
            continue
        total += 1
        oracle = is_canonical_bruteforce(system)
        if oracle.canonical:
            canonical_count += 1
        if method == "closed":
            other = characterize(system)
            agree = other.canonical == oracle.canonical
            other_min = None
            rule = other.rule
        else:
            other = is_canonical_pearson(system)
            agree = (
                other.canonical == oracle.canonical
                and other.min_counterexample == oracle.min_counterexample
            )
            other_min = other.min_counterexample
            rule = "pearson"
        records.append(
            (system.denominations, oracle.canonical, oracle.min_counterexample, rule)
        )
        if not agree:
            mismatches.append(
                {
                    "system": list(system.denominations),
                    "oracle": {
                        "canonical": oracle.canonical,
                        "min_counterexample": oracle.min_counterexample,
                    },
                    "compared": {"canonical": other.canonical, "min_counterexample": other_min},
                    "rule": rule,
                }
            )
    return records, mismatches, canonical_count, total


def cross_validate(spec: EnumerationSpec, method: str = "closed", jobs: int = 1) -> ValidationReport:
    """Sweep the spec and compare `method` verdicts against the brute-force oracle.

    The work is split into `jobs` contiguous slices of the enumeration and the
    per-slice results are merged in order, so the report does not depend on
    the number of workers.
    """
    if method not in METHODS:
        raise InvalidSpecError(f"unknown method {method!r}, expected one of {METHODS}")
    if method == "closed" and spec.n > 6:
        raise InvalidSpecError("closed-form comparison supports at most six denominations")
    started = time.perf_counter()
    universe = math.comb(spec.max_denomination - 1, spec.n - 1)
    jobs = max(1, min(int(jobs), universe or 1))
    if jobs == 1:
        parts = [_validate_chunk(spec, method, 0, universe)]
    else:
        step = -(-universe // jobs)
        bounds = [(i, min(i + step, universe)) for i in range(0, universe, step)]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=len(bounds)) as pool:
            parts = pool.starmap(
                _validate_chunk, [(spec, method, a, b) for a, b in bounds]
            )
    records: list[tuple] = []
    mismatches: list[dict] = []
    canonical_count = 0
    total = 0
    for rec, mis, can, tot in parts:
        records.extend(rec)
        mismatches.extend(mis)
        canonical_count += can
        total += tot
    return ValidationReport(
        spec=spec,
        method=method,
        total_systems=total,
        canonical_count=canonical_count,
        mismatches=mismatches,
        elapsed=time.perf_counter() - started,
        records=records,
    )


def _csv_lines(report: ValidationReport) -> Iterator[str]:
    yield "system;canonical;min_counterexample;rule"
    for denoms, canonical, min_cx, rule in report.records:
        system = ",".join(str(c) for c in denoms)
        cx = "" if min_cx is None else str(min_cx)
        yield f'"{system}";{"true" if canonical else "false"};{cx};{rule}'


def emit_report(report: ValidationReport, format: str = "json", stream=None) -> bytes:
    """Serialize a report as JSON (full object) or CSV (one row per system)."""
    if format == "json":
        data = (json.dumps(report.to_dict()) + "\n").encode()
    elif format == "csv":
        data = ("\n".join(_csv_lines(report)) + "\n").encode()
    else:
        raise InvalidSpecError(f"unknown report format {format!r}")
    if stream is not None:
        try:
            stream.write(data)
        except OSError as exc:
            raise IoFailureError(str(exc)) from exc
    return data
