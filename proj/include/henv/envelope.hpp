#pragma once

#include <span>
#include <vector>

#include "henv/heisenberg.hpp"
#include "henv/line_family.hpp"
#include "henv/support.hpp"

namespace henv {

/// Derived invariants of a generated envelope.
struct InvariantReport {
    std::vector<double> k;        // closed-form curvature 1/(p+p'') per node; NaN at cusp nodes
    double tau_sup = 0.0;         // sup |contact normality| over regular nodes
    double length = 0.0;          // integral of |p+p''|
    double area_F = 0.0;          // Santalo projected area (NaN when support not periodic)
    double z_drop = 0.0;          // z(2pi) - z(0)
    double horiz_residual_sup = 0.0;
};

struct ClosednessResult {
    double z_drop = 0.0;
    bool closed = false;
    double area_F = 0.0;              // for the z_drop = -2F identity
    double identity_residual = 0.0;   // |z_drop + 2 area_F|
};

/// Cumulative quadrature of t' = (p')^2 - p^2 from t0 over a uniform grid.
/// The result's derivative is the exact integrand; values between nodes are
/// cubic Hermite with that derivative.
HeightFunction integrate_t(const SupportFunction& p, double t0, std::span<const double> grid);

/// Family (p(theta), theta, t(theta)) with t integrated from t0 on a uniform
/// grid of n_intervals subintervals of [0, 2pi].
FamilySpec make_family(const SupportFunction& p, double t0, std::size_t n_intervals);

/// Envelope point (p cos - p' sin, p sin + p' cos, t - p'p) at theta.
Point3 envelope_point(const SupportFunction& p, const HeightFunction& t, double theta);

/// Closed-form envelope sampled on the family grid. First derivatives are
/// analytic when the support is analytic; second derivatives are analytic
/// when the support has a third derivative, finite-difference otherwise.
/// Throws CompatibilityViolation when the family violates t' = (p')^2 - p^2.
Curve generate_envelope(const FamilySpec& fam);

/// k(theta) = 1/(p + p''). Throws DegenerateRadius when p+p'' vanishes at a
/// node or changes sign between adjacent nodes (cusp of the envelope).
std::vector<double> curvature_closed_form(const SupportFunction& p, std::span<const double> grid);

/// Per-node flags marking where the closed-form curvature identity cannot
/// hold: the radius p+p'' vanishes (within the floor), vanishes between
/// neighbours, or is negative (the traversal past a cusp is
/// orientation-reversed there and the parameter-form curvature returns
/// +1/|p+p''| instead).
std::vector<char> degenerate_radius_mask(const SupportFunction& p, std::span<const double> grid);

/// Horizontal length: integral of |p+p''| over [0,2pi]; cross-checked against
/// the radius-of-curvature form when the radius never degenerates.
double horizontal_length(const SupportFunction& p, std::span<const double> grid);

/// Santalo area of the projection: (1/2) integral of p^2 - (p')^2.
/// Requires a periodic support.
double santalo_area(const SupportFunction& p, std::span<const double> grid);

/// z-drop over one period and the closedness verdict. Requires periodic p.
ClosednessResult closedness_check(const SupportFunction& p, const HeightFunction& t,
                                  std::size_t n_intervals = 4096);

/// Full invariant report for a generated curve and its family.
InvariantReport compute_invariants(const FamilySpec& fam, const Curve& curve);

}  // namespace henv
