"""Exact f- and h-vectors of cyclic polytopes, with shape analysis and
verification sweeps."""

from cyclicpoly.errors import (
    CyclicError,
    DomainError,
    IndexDomainError,
    ParameterError,
    ResourceGuardError,
)
from cyclicpoly.exactcomb import binom, pascal_row
from cyclicpoly.cyclic import (
    ExtendedFSequence,
    FanTriangle,
    HVector,
    PolytopeParams,
    build_triangle,
    euler_holds,
    f_entry_direct,
    f_vector_direct,
    f_vector_from_triangle,
    f_vector_streaming,
    h_vector,
    triangle_entry_direct,
)
from cyclicpoly.shape import (
    AuditReport,
    PositiveSequence,
    ShapeReport,
    Unimodality,
    analyze_shape,
    audit_dip_propagation,
    find_dips,
    is_log_concave,
    is_unimodal,
    lemma_check,
    pascal_extend,
)
from cyclicpoly.oracle import (
    DEFAULT_ORACLE_CAP,
    FacetList,
    enumerate_facets,
    is_gale_facet,
    oracle_f_vector,
)

__version__ = "0.1.0"
