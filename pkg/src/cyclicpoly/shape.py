"""Shape of positive integer sequences: dips, log-concavity, unimodality.

All sequences analysed here start at logical index -1, so position ``i`` in
storage is reported as index ``i - 1``. Dips use a strict inequality and
log-concavity a weak one; equal neighbours never form a dip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from cyclicpoly.cyclic import PolytopeParams, as_params, build_triangle, h_vector
from cyclicpoly.errors import DomainError

FIRST_INDEX = -1


@dataclass(frozen=True)
class PositiveSequence:
    """Nonempty sequence of positive integers indexed from -1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise DomainError("sequence must be nonempty")
        for x in entries:
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise DomainError(f"sequence entries must be positive integers, got {x!r}")

    def __getitem__(self, j: int) -> int:
        if not FIRST_INDEX <= j <= self.last_index:
            raise IndexError(j)
        return self.entries[j - FIRST_INDEX]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def last_index(self) -> int:
        return len(self.entries) - 1 + FIRST_INDEX


def _coerce(s) -> tuple[int, ...]:
    if isinstance(s, PositiveSequence):
        return s.entries
    return PositiveSequence(tuple(s.entries if hasattr(s, "entries") else s)).entries


class Unimodality(NamedTuple):
    unimodal: bool
    peak_start: int | None
    peak_end: int | None


@dataclass(frozen=True)
class ShapeReport:
    dips: list[int]
    log_concave: bool
    unimodal: bool
    peak_start: int | None
    peak_end: int | None


def _dip_positions(xs: tuple[int, ...]) -> list[int]:
    return [i for i in range(1, len(xs) - 1) if xs[i] * xs[i] < xs[i - 1] * xs[i + 1]]


def find_dips(s: PositiveSequence | Iterable[int]) -> list[int]:
    """Logical indices j with s(j)^2 < s(j-1) * s(j+1), ascending."""
    return [i + FIRST_INDEX for i in _dip_positions(_coerce(s))]


def is_log_concave(s: PositiveSequence | Iterable[int]) -> bool:
    xs = _coerce(s)
    return all(xs[i - 1] * xs[i + 1] <= xs[i] * xs[i] for i in range(1, len(xs) - 1))


def is_unimodal(s: PositiveSequence | Iterable[int]) -> Unimodality:
    """Weak rise-then-fall test; the peak is the plateau of maximal entries."""
    xs = _coerce(s)
    falling = False
    for a, b in zip(xs, xs[1:]):
        if b < a:
            falling = True
        elif b > a and falling:
            return Unimodality(False, None, None)
    top = max(xs)
    start = xs.index(top)
    end = len(xs) - 1 - xs[::-1].index(top)
    return Unimodality(True, start + FIRST_INDEX, end + FIRST_INDEX)


def analyze_shape(s: PositiveSequence | Iterable[int]) -> ShapeReport:
    xs = _coerce(s)
    dips = find_dips(xs)
    uni = is_unimodal(xs)
    return ShapeReport(
        dips=dips,
        log_concave=not dips,
        unimodal=uni.unimodal,
        peak_start=uni.peak_start,
        peak_end=uni.peak_end,
    )


def pascal_extend(s: PositiveSequence | Iterable[int], seed: int) -> PositiveSequence:
    """Next triangle row: y(-1) = 1, y(j) = s(j-1) + s(j), last entry ``seed``."""
    xs = _coerce(s)
    if xs[0] != 1:
        raise DomainError(f"sequence must start with 1, got {xs[0]}")
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 1:
        raise DomainError(f"seed must be a positive integer, got {seed!r}")
    out = [1]
    out.extend(xs[i - 1] + xs[i] for i in range(1, len(xs)))
    out.append(seed)
    return PositiveSequence(tuple(out))


def lemma_check(s: PositiveSequence | Iterable[int], seed: int) -> bool:
    """Whether extending a log-concave row by a seed no larger than its last
    entry stays log-concave. Raises DomainError outside those hypotheses."""
    xs = _coerce(s)
    if xs[0] != 1:
        raise DomainError(f"sequence must start with 1, got {xs[0]}")
    if not is_log_concave(xs):
        raise DomainError("sequence must be log-concave")
    if seed > xs[-1]:
        raise DomainError(f"seed {seed} exceeds last entry {xs[-1]}")
    return is_log_concave(pascal_extend(xs, seed))


@dataclass
class AuditReport:
    params: PolytopeParams
    row_dips: list[list[int]]
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def audit_dip_propagation(params: PolytopeParams | tuple[int, int]) -> AuditReport:
    """Replay the inductive argument on the actual triangle of C(v, d).

    Rows with 2k < d must be dip-free. From k = ceil(d/2) upwards each row's
    diagonal seed must not exceed the previous row's last entry, and a dip in
    P(k) must be matched by a dip in P(k-1). Row d must be dip-free.
    """
    p = as_params(params)
    d = p.d
    tri = build_triangle(p)
    h = h_vector(p).entries
    dips = [find_dips(row) for row in tri.rows]
    report = AuditReport(p, dips)
    for k in range(d + 1):
        if 2 * k < d and dips[k]:
            report.failures.append(f"P({k}) has dips {dips[k]} below the middle row")
    for k in range((d + 1) // 2, d + 1):
        seed = h[k + 1] if k < d else 1
        prev_last = tri.rows[k - 1][-1]
        if seed > prev_last:
            report.failures.append(
                f"P({k}) seed {seed} exceeds last entry {prev_last} of P({k - 1})"
            )
        if dips[k] and not dips[k - 1]:
            report.failures.append(f"P({k}) has dips {dips[k]} but P({k - 1}) has none")
    if dips[d]:
        report.failures.append(f"P({d}) has dips {dips[d]}")
    return report
