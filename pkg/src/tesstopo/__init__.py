"""Topological parameter calculus for stationary spatial tessellations."""

from .errors import (
    TesstopoError,
    ParameterDomainError,
    DegenerateIntensityError,
    InfeasibleParametersError,
    MixtureShareError,
    PlanarParameterError,
    GeneratorParameterError,
    NonConvexCellError,
    NotATessellationError,
    UnknownEntryError,
)
from .scalar import Scalar, as_scalar, PI2, ZERO, ONE
from .params import (
    TessParams,
    DerivedSummary,
    cell_intensity_form,
    derive,
    check_identities,
    is_consistent,
)
from .feasibility import (
    Bound,
    FeasibilityReport,
    RegionPatch,
    PlateProfileRegion,
    classify,
    plate_cap,
    ridge_rate_interval,
    side_rate_interval,
    interior_rate_region,
    hemi_pi_region,
    plate_profile_region,
    sample_feasible,
)
from .transforms import (
    PlanarParams,
    MixtureCurve,
    stratum,
    column,
    central_point,
    central_point_orbit,
    mixture,
    mixture_curve,
)
from . import catalog
from . import complexes
from .complexes import (
    FundamentalDomain,
    MeasuredParams,
    PeriodicComplex,
    ValidationReport,
    build_complex,
    domain_from_json,
    generate,
    load_domain_file,
    make_domain,
    measure,
    validate,
    vertex_stats,
)

__version__ = "0.1.0"
