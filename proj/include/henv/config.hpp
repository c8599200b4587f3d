#pragma once

namespace henv {

/// Numeric tolerances used across the library. All values are scaled by the
/// multiplier in the ENVELOPE_TOL_OVERRIDE environment variable (default 1),
/// read once per process.
struct Tolerances {
    double horizontal = 1e-6;        // sup |z'-x'y+xy'| for a curve to count as horizontal
    double compat_analytic = 1e-9;   // compatibility residual, analytic support (relative, see compatibility_scale)
    double compat_sampled = 1e-5;    // same, sampled support
    double closed_base = 1e-8;       // |z_drop| <= closed_base*(1+|t0|) means closed
    double pair_base = 1e-8;         // pair residual <= pair_base*(1+sup p1 * sup p2)
    double period = 1e-8;            // seam mismatch allowed for periodic data
    double eps_reg = 1e-12;          // squared horizontal speed floor (regularity guard)
    double radius_floor = 1e-6;      // |p+p''| floor before a node counts as a cusp
};

/// Process-wide tolerance set (after applying ENVELOPE_TOL_OVERRIDE).
const Tolerances& tols();

/// Multiplier parsed from ENVELOPE_TOL_OVERRIDE (1.0 when unset/invalid).
double tolerance_scale();

}  // namespace henv
