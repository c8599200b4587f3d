"""Horizontal envelopes of horizontal line families in the Heisenberg group.

Thin wrapper over the C++ core. See the project README for the library and
CLI documentation.
"""

from henv._core import (  # noqa: F401
    TWO_PI,
    ClosednessResult,
    Curve,
    CurveSample,
    EnvelopeError,
    FamilySpec,
    HeightFunction,
    HorizontalLine,
    InvariantReport,
    ObservedSigns,
    PairReport,
    Point3,
    SupportFunction,
    add_supports,
    check_pair_condition,
    classify_pair,
    closedness_check,
    compute_invariants,
    contact_normality,
    curvature_closed_form,
    envelope_point,
    exponential_partner,
    generate_envelope,
    group_inverse,
    group_op,
    horizontal_length,
    horizontality_residual,
    integrate_t,
    invariant_report_json,
    is_horizontal,
    left_translate,
    line_point,
    make_analytic_height,
    make_exponential,
    make_family,
    make_sampled,
    make_sampled_height,
    make_trig_poly,
    oracle_envelope,
    p_curvature,
    pair_report_json,
    plane_residuals,
    plane_theta_derivatives,
    recover_family,
    santalo_area,
    sum_family,
    tangency_check,
    uniform_grid,
    fd_compatibility_residual,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
