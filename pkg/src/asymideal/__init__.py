"""Exact multiplicities, volumes and log canonical thresholds of monomial ideals
and graded sequences of ideals."""

from .monomial import (
    DimensionError,
    MonomialIdeal,
    NotZeroDimensionalError,
    colength,
    colon,
    contains_monomial,
    intersection,
    is_zero_dimensional,
    minimalize,
    order_at_max_ideal,
    power,
    product,
)
from .newton import (
    Location,
    NewtonPolyhedron,
    UnitIdealError,
    WeightVector,
    build_polyhedron,
    complement_volume,
    lct,
    locate,
    multiplicity,
    ord_weight,
)
from .multiplier import AsymptoticResult, asymptotic_multiplier, jumping_scan, multiplier_ideal
from .sequences import (
    Direction,
    GradedSequence,
    LimitEstimate,
    colon_sequence,
    combine,
    fekete_limit,
    lct_bracket,
    lct_limit,
    multiplicity_limit,
    ord_limit,
    positivity_certificate,
    saturate,
    verify_graded_prefix,
    volume_limsup,
)
from .groebner import (
    MonomialOrder,
    OrderKind,
    Polynomial,
    PolynomialIdeal,
    WorkLimitExceeded,
    buchberger,
    colength_poly,
    ideal_power,
    initial_ideal,
    lowest_degree_part,
    normal_form,
    samuel_multiplicity,
)
from .textio import parse_ideal

__version__ = "0.1.0"
