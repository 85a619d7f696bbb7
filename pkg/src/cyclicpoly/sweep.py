"""Exhaustive verification over ranges of (v, d) and report rendering."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from cyclicpoly.cyclic import (
    ExtendedFSequence,
    PolytopeParams,
    euler_holds,
    f_vector_direct,
    f_vector_streaming,
)
from cyclicpoly.shape import analyze_shape

CHECKS = ("log-concave", "euler", "routes")
DEFAULT_ROUTE_EVERY = 50
FORMATS = ("json", "csv", "text")
FIELDS = ("v", "d", "f_vector", "log_concave", "unimodal", "peak_start", "peak_end")


@dataclass(frozen=True)
class Failure:
    v: int
    d: int
    check: str
    details: str


@dataclass
class SweepReport:
    d_min: int
    d_max: int
    v_min: int
    v_max: int
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


def make_record(seq: ExtendedFSequence) -> dict:
    """Serializable summary of one extended f-sequence, fields in FIELDS order."""
    shape = analyze_shape(seq)
    return {
        "v": seq.params.v,
        "d": seq.params.d,
        "f_vector": [str(x) for x in seq.entries],
        "log_concave": shape.log_concave,
        "unimodal": shape.unimodal,
        "peak_start": shape.peak_start,
        "peak_end": shape.peak_end,
    }


def valid_pairs(d_min: int, d_max: int, v_min: int, v_max: int) -> list[tuple[int, int]]:
    """All admissible (v, d) in the box, ordered by (d, v)."""
    return [
        (v, d)
        for d in range(max(d_min, 2), d_max + 1)
        for v in range(max(v_min, d + 1), v_max + 1)
    ]


def check_pair(v: int, d: int, checks: tuple[str, ...], compare_routes: bool) -> tuple[dict, list[Failure]]:
    p = PolytopeParams(v, d)
    seq = f_vector_direct(p)
    record = make_record(seq)
    failures = []
    if "log-concave" in checks and not record["log_concave"]:
        dips = analyze_shape(seq).dips
        failures.append(Failure(v, d, "log-concave", f"dips at {dips}"))
    if "euler" in checks and not euler_holds(seq):
        failures.append(Failure(v, d, "euler", "alternating sum mismatch"))
    if "routes" in checks and compare_routes:
        other = f_vector_streaming(p)
        if other.entries != seq.entries:
            failures.append(
                Failure(v, d, "routes", f"direct {seq.entries} != triangle {other.entries}")
            )
    return record, failures


def _check_batch(batch):
    return [check_pair(*item) for item in batch]


def sweep_verify(
    d_min: int,
    d_max: int,
    v_min: int,
    v_max: int,
    checks: tuple[str, ...] = CHECKS,
    jobs: int = 1,
    route_every: int = DEFAULT_ROUTE_EVERY,
) -> SweepReport:
    """Run ``checks`` on every admissible pair; invalid pairs are skipped.

    Route equivalence runs on pairs whose position in (d, v) order is a
    multiple of ``route_every`` (1 checks every pair).
    """
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    if route_every < 1:
        raise ValueError("route_every must be >= 1")
    start = time.perf_counter()
    pairs = valid_pairs(d_min, d_max, v_min, v_max)
    work = [(v, d, tuple(checks), i % route_every == 0) for i, (v, d) in enumerate(pairs)]
    if jobs > 1 and len(work) > 1:
        size = max(1, len(work) // (jobs * 8))
        batches = [work[i : i + size] for i in range(0, len(work), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for chunk in pool.map(_check_batch, batches) for r in chunk]
    else:
        results = _check_batch(work)
    results.sort(key=lambda r: (r[0]["d"], r[0]["v"]))
    report = SweepReport(d_min, d_max, v_min, v_max, checked=len(results))
    for record, failures in results:
        report.records.append(record)
        report.failures.extend(failures)
    report.elapsed = time.perf_counter() - start
    return report


def _text_line(record: dict) -> str:
    peak = (
        f"{record['peak_start']}..{record['peak_end']}"
        if record["unimodal"]
        else "-"
    )
    return (
        f"C({record['v']},{record['d']}): {' '.join(record['f_vector'])}"
        f"  log-concave={str(record['log_concave']).lower()}"
        f" unimodal={str(record['unimodal']).lower()} peak={peak}"
    )


def render_records(records: list[dict], fmt: str) -> bytes:
    """Serialize records as JSON lines, CSV or plain text (UTF-8)."""
    if fmt == "json":
        text = "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELDS)
        for r in records:
            writer.writerow(
                [
                    r["v"],
                    r["d"],
                    ";".join(r["f_vector"]),
                    str(r["log_concave"]).lower(),
                    str(r["unimodal"]).lower(),
                    "" if r["peak_start"] is None else r["peak_start"],
                    "" if r["peak_end"] is None else r["peak_end"],
                ]
            )
        text = buf.getvalue()
    elif fmt == "text":
        text = "".join(_text_line(r) + "\n" for r in records)
    else:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    return text.encode("utf-8")


def summary_lines(report: SweepReport) -> list[str]:
    lines = [
        f"d in [{report.d_min}, {report.d_max}], v in [{report.v_min}, {report.v_max}]",
        f"checked: {report.checked}",
        f"failures: {len(report.failures)}",
    ]
    for f in report.failures:
        lines.append(f"  C({f.v},{f.d}) {f.check}: {f.details}")
    lines.append("PASS" if report.passed else "FAIL")
    return lines


def render(report: SweepReport, fmt: str) -> bytes:
    """JSON and CSV carry only per-pair records, so they are reproducible
    byte for byte; the text form appends a summary with timing."""
    body = render_records(report.records, fmt)
    if fmt != "text":
        return body
    tail = summary_lines(report) + [f"elapsed: {report.elapsed:.2f}s"]
    return body + ("\n".join(tail) + "\n").encode("utf-8")
