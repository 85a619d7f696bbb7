"""Brute-force f-vectors of cyclic polytopes from Gale's evenness condition.

This path shares nothing with the h-vector formulas: facets are the d-subsets
of {1..v} that pass the evenness test, and every face is a subset of a facet.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from cyclicpoly.cyclic import ExtendedFSequence, PolytopeParams, as_params
from cyclicpoly.errors import DomainError, ResourceGuardError

DEFAULT_ORACLE_CAP = 16


@dataclass(frozen=True)
class FacetList:
    facets: tuple[tuple[int, ...], ...]
    params: PolytopeParams

    def __len__(self):
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)


def is_gale_facet(params: PolytopeParams | tuple[int, int], s: Iterable[int]) -> bool:
    """True iff every two non-members of ``s`` enclose an even number of members."""
    p = as_params(params)
    members = set(s)
    if len(members) != p.d:
        raise DomainError(f"a facet candidate needs {p.d} distinct labels, got {sorted(members)}")
    if min(members) < 1 or max(members) > p.v:
        raise DomainError(f"labels must lie in 1..{p.v}, got {sorted(members)}")
    # parity between consecutive non-members suffices; longer gaps are sums
    between = None
    for x in range(1, p.v + 1):
        if x in members:
            if between is not None:
                between += 1
        else:
            if between is not None and between % 2:
                return False
            between = 0
    return True


def _check_cap(p: PolytopeParams, cap: int) -> None:
    if p.v > cap:
        raise ResourceGuardError(
            f"oracle enumeration refused for v={p.v} > cap {cap}"
        )


def enumerate_facets(params: PolytopeParams | tuple[int, int], cap: int = DEFAULT_ORACLE_CAP) -> FacetList:
    """All Gale facets of C(v, d) in lexicographic order."""
    p = as_params(params)
    _check_cap(p, cap)
    facets = tuple(
        c for c in combinations(range(1, p.v + 1), p.d) if is_gale_facet(p, c)
    )
    return FacetList(facets, p)


def _mask(labels: Iterable[int]) -> int:
    m = 0
    for x in labels:
        m |= 1 << (x - 1)
    return m


def oracle_f_vector(params: PolytopeParams | tuple[int, int], cap: int = DEFAULT_ORACLE_CAP) -> ExtendedFSequence:
    """Count faces of every size by downward closure of the facet list."""
    p = as_params(params)
    faces: set[int] = set()
    for facet in enumerate_facets(p, cap):
        full = _mask(facet)
        sub = full
        while sub:
            faces.add(sub)
            sub = (sub - 1) & full
    counts = [0] * p.d
    for m in faces:
        counts[m.bit_count() - 1] += 1
    return ExtendedFSequence((1, *counts, 1), p)
