"""Periodic tessellation engine: build, measure, validate.

Exact-arithmetic construction of space-filling periodic cell complexes from
a fundamental domain, plus combinatorial measurement of every parameter the
rest of the package predicts by formula.
"""

from .build import (
    CellRecord,
    EdgeRecord,
    PeriodicComplex,
    PlateOrbit,
    VertexRecord,
    build_complex,
)
from .domain import (
    FundamentalDomain,
    domain_from_json,
    load_domain_file,
    make_domain,
)
from .generators import GENERATORS, generate
from .measure import (
    MeasuredParams,
    ValidationReport,
    VertexStats,
    measure,
    validate,
    vertex_stats,
)

__all__ = [
    "CellRecord",
    "EdgeRecord",
    "FundamentalDomain",
    "GENERATORS",
    "MeasuredParams",
    "PeriodicComplex",
    "PlateOrbit",
    "ValidationReport",
    "VertexRecord",
    "VertexStats",
    "build_complex",
    "domain_from_json",
    "generate",
    "load_domain_file",
    "make_domain",
    "measure",
    "validate",
    "vertex_stats",
]
