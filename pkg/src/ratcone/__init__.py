"""Cohomology vanishing certificates for cones over a product surface.

The package decides, for the product X of a smooth projective curve
with the projective line, whether the affine cone over (X, L) admits a
rationalizing boundary divisor, by scanning the higher cohomology of
the twists m*L - D.  Dimensions are exact integers or exact integer
intervals, every verdict is a re-checkable certificate, and for the
unit polarization on curves of genus at least 2 a machine-verified
case split upgrades grid evidence to a universal nonexistence proof.
"""

from .criterion import (
    EMPTY_LOCUS,
    Certificate,
    ConeProblem,
    TopCohomologyResult,
    Verdict,
    Witness,
    codim_precheck,
    cone_check,
    serre_bound,
    top_cohomology_check,
    validate_certificate,
)
from .curve import CurveModel, PointMode, h0_curve, h0_p1, h1_curve, h1_p1
from .dimension import DimValue
from .jsonio import (
    CERTIFICATE_SCHEMA,
    REPORT_SCHEMA,
    certificate_from_json,
    certificate_to_json,
    closed_form_from_json,
    closed_form_to_json,
    dim_from_json,
    dim_to_json,
    dumps,
    report_from_json,
    report_to_json,
)
from .search import (
    ClosedFormCase,
    ClosedFormError,
    ClosedFormNonexistence,
    SearchReport,
    SearchVerdict,
    nonexistence_closed_form,
    predicted_witness_m,
    search_grid,
    verify_closed_form,
)
from .surface import SurfaceClass, intersect, is_ample, is_effective_class, kunneth_h

__version__ = "0.1.0"

__all__ = [
    "CERTIFICATE_SCHEMA",
    "Certificate",
    "ClosedFormCase",
    "ClosedFormError",
    "ClosedFormNonexistence",
    "ConeProblem",
    "CurveModel",
    "DimValue",
    "EMPTY_LOCUS",
    "PointMode",
    "REPORT_SCHEMA",
    "SearchReport",
    "SearchVerdict",
    "SurfaceClass",
    "TopCohomologyResult",
    "Verdict",
    "Witness",
    "certificate_from_json",
    "certificate_to_json",
    "closed_form_from_json",
    "closed_form_to_json",
    "codim_precheck",
    "cone_check",
    "dim_from_json",
    "dim_to_json",
    "dumps",
    "h0_curve",
    "h0_p1",
    "h1_curve",
    "h1_p1",
    "intersect",
    "is_ample",
    "is_effective_class",
    "kunneth_h",
    "nonexistence_closed_form",
    "predicted_witness_m",
    "report_from_json",
    "report_to_json",
    "search_grid",
    "serre_bound",
    "top_cohomology_check",
    "validate_certificate",
    "verify_closed_form",
    "__version__",
]
