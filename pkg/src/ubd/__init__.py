"""Exact-arithmetic toolkit for modular-function expansions on X(Gamma^0(11)),
unbounded-denominator certificates for roots of catalog functions, and the
rank-2 sublattice census of character groups."""

__version__ = "0.1.0"

from .exactnum import (
    Fraction,
    INFINITY,
    NumberField,
    AlgebraicNumber,
    ValuationProfile,
    val_p,
    nf_arith,
    min_poly,
    newton_polygon_valuations,
    ord_at_unique_prime,
)
from .qseries import (
    EtaQuotient,
    LaurentSeries,
    derivation_wdw,
    deserialize_series,
    eta_quotient_expand,
    nth_root_normalized,
    serialize_series,
    series_invert,
    series_pow,
    series_ring_ops,
)
from .ellcurve import (
    CurveFunction,
    CurvePoint,
    WeierstrassCurve,
    function_with_divisor,
    point_op,
    point_order,
    torsion_x_locus,
    verify_divisor,
)
from .x011 import (
    GroupCatalogEntry,
    build_catalog,
    catalog_export,
    expand_on_curve,
    expand_xy,
    g5_family,
    g5_series,
    x11_curve,
)
from .ubdetect import UbdVerdict, GrowthProfile, detect, growth_profile, analyze_catalog
from .census import (
    LatticeTriple,
    CensusResult,
    enumerate_triples,
    s_count,
    join_is_full,
    ubd_lower_bound_experiment,
)
