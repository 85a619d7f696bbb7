"""h-vectors, f-vectors and the generalized Pascal triangle of C(v, d).

Sequences that are logically indexed from -1 (f_{-1}, f_0, ...) are stored
zero-based; every public accessor takes the logical index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from cyclicpoly.errors import IndexDomainError, ParameterError
from cyclicpoly.exactcomb import binom


@dataclass(frozen=True)
class PolytopeParams:
    """Vertex count ``v`` and dimension ``d`` of a cyclic polytope."""

    v: int
    d: int

    def __post_init__(self):
        if isinstance(self.v, bool) or not isinstance(self.v, int):
            raise ParameterError(f"v must be an integer, got {self.v!r}")
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise ParameterError(f"d must be an integer, got {self.d!r}")
        if self.d < 2:
            raise ParameterError(f"dimension must satisfy d >= 2, got d={self.d}")
        if self.v < self.d + 1:
            raise ParameterError(
                f"vertex count must satisfy v >= d + 1 = {self.d + 1}, got v={self.v}"
            )

    @classmethod
    def is_valid(cls, v: int, d: int) -> bool:
        return d >= 2 and v >= d + 1

    def __str__(self):
        return f"C({self.v},{self.d})"


def as_params(params: PolytopeParams | tuple[int, int]) -> PolytopeParams:
    if isinstance(params, PolytopeParams):
        return params
    v, d = params
    return PolytopeParams(v, d)


@dataclass(frozen=True)
class HVector:
    """h_0, ..., h_d of a cyclic polytope (zero-based, as in the literature)."""

    entries: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.entries[j]

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


@dataclass(frozen=True)
class ExtendedFSequence:
    """f_{-1}, f_0, ..., f_{d-1} followed by a trailing 1.

    ``seq[j]`` uses the logical index j in [-1, d]; ``entries`` is the
    zero-based storage.
    """

    entries: tuple[int, ...]
    params: PolytopeParams

    def __getitem__(self, j: int) -> int:
        if not -1 <= j <= self.params.d:
            raise IndexDomainError(f"index {j} outside [-1, {self.params.d}]")
        return self.entries[j + 1]

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    @property
    def f_vector(self) -> tuple[int, ...]:
        """The proper f-vector (f_{-1}, ..., f_{d-1}) without the trailing 1."""
        return self.entries[:-1]


@dataclass(frozen=True)
class FanTriangle:
    """Rows P(0), ..., P(d); row k stores the entries for j = -1, ..., k."""

    rows: tuple[tuple[int, ...], ...]
    params: PolytopeParams

    def entry(self, k: int, j: int) -> int:
        """Entry (k, j); zero outside -1 <= j <= k."""
        if not 0 <= k <= self.params.d:
            raise IndexDomainError(f"row {k} outside [0, {self.params.d}]")
        if j < -1 or j > k:
            return 0
        return self.rows[k][j + 1]

    def row(self, k: int) -> tuple[int, ...]:
        return self.rows[k]

    def __len__(self):
        return len(self.rows)


def h_vector(params: PolytopeParams | tuple[int, int]) -> HVector:
    p = as_params(params)
    v, d = p.v, p.d
    half = d // 2
    low = [binom(v - d - 1 + j, j) for j in range(half + 1)]
    return HVector(tuple(low[j] if j <= half else low[d - j] for j in range(d + 1)))


def f_entry_direct(params: PolytopeParams | tuple[int, int], j: int) -> int:
    """f_j as the binomial transform of the h-vector."""
    p = as_params(params)
    if not -1 <= j <= p.d - 1:
        raise IndexDomainError(f"face index j={j} outside [-1, {p.d - 1}]")
    h = h_vector(p)
    return _transform(h.entries, p.d, j)


def _transform(h: tuple[int, ...], k: int, j: int) -> int:
    return sum(binom(k - i, k - j - 1) * h[i] for i in range(k + 1))


def f_vector_direct(params: PolytopeParams | tuple[int, int]) -> ExtendedFSequence:
    p = as_params(params)
    h = h_vector(p).entries
    entries = [_transform(h, p.d, j) for j in range(-1, p.d)]
    entries.append(1)
    return ExtendedFSequence(tuple(entries), p)


def triangle_entry_direct(params: PolytopeParams | tuple[int, int], k: int, j: int) -> int:
    """Triangle entry (k, j) evaluated from its closed-form sum."""
    p = as_params(params)
    if not 0 <= k <= p.d:
        raise IndexDomainError(f"row k={k} outside [0, {p.d}]")
    if j < -1 or j > k:
        return 0
    h = h_vector(p).entries
    if j == k:
        return h[k + 1] if k < p.d else 1
    return _transform(h, k, j)


def _diagonal_seed(h: tuple[int, ...], k: int, d: int) -> int:
    return h[k + 1] if k < d else 1


def _extend(row: list[int] | tuple[int, ...], seed: int) -> list[int]:
    nxt = [1]
    nxt.extend(row[j - 1] + row[j] for j in range(1, len(row)))
    nxt.append(seed)
    return nxt


def build_triangle(params: PolytopeParams | tuple[int, int]) -> FanTriangle:
    """Materialize every row of the triangle via Pascal's rule."""
    p = as_params(params)
    h = h_vector(p).entries
    rows = [(1, h[1])]
    for k in range(1, p.d + 1):
        rows.append(tuple(_extend(rows[-1], _diagonal_seed(h, k, p.d))))
    return FanTriangle(tuple(rows), p)


def f_vector_from_triangle(tri: FanTriangle) -> ExtendedFSequence:
    return ExtendedFSequence(tuple(tri.rows[tri.params.d]), tri.params)


def f_vector_streaming(params: PolytopeParams | tuple[int, int]) -> ExtendedFSequence:
    """Row d of the triangle, keeping only the current row in memory."""
    p = as_params(params)
    h = h_vector(p).entries
    row = [1, h[1]]
    for k in range(1, p.d + 1):
        row = _extend(row, _diagonal_seed(h, k, p.d))
    return ExtendedFSequence(tuple(row), p)


def euler_holds(seq: ExtendedFSequence) -> bool:
    """Check sum_{j=-1}^{d-1} (-1)^j f_j == (-1)^(d-1)."""
    d = seq.params.d
    total = sum((-1) ** (j % 2) * seq[j] for j in range(-1, d))
    return total == (-1) ** ((d - 1) % 2)
