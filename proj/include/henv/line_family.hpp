#pragma once

#include <span>
#include <utility>
#include <vector>

#include "henv/heisenberg.hpp"
#include "henv/support.hpp"

namespace henv {

/// One horizontal line, named by (p, theta, t): p >= 0 is the distance from
/// the origin to the projected line, theta the angle of its normal, t the
/// height of the base point Q' = (p cos theta, p sin theta, t).
struct HorizontalLine {
    double p = 0.0;
    double theta = 0.0;
    double t = 0.0;
};

/// One-parameter family of horizontal lines (p(theta), theta, t(theta)) on a
/// theta grid.
struct FamilySpec {
    SupportFunction support;
    HeightFunction height;
    std::vector<double> grid;

    /// Validates the grid and enforces the height-compatibility residual at
    /// every node (CompatibilityViolation otherwise). Use for externally
    /// supplied heights.
    static FamilySpec checked(SupportFunction support, HeightFunction height, std::vector<double> grid);

    /// Validates the grid only. Use when the height is produced by
    /// integration (residual zero by construction) or when the family is an
    /// intermediate whose admissibility is itself under test.
    static FamilySpec unchecked(SupportFunction support, HeightFunction height, std::vector<double> grid);
};

/// sup over grid nodes of |t' - ((p')^2 - p^2)|.
double compatibility_residual(const FamilySpec& fam);

/// Magnitude scale of the residual evaluation, 1 + sup(|t'| + p^2 + (p')^2).
/// Tolerances are scaled by it so the check is meaningful for supports of any
/// size in double precision.
double compatibility_scale(const FamilySpec& fam);

/// Effective tolerance: tol_compat(kind) * compatibility_scale.
double compatibility_tolerance(const FamilySpec& fam);

/// Point on the line at signed arc-length s from the base point:
/// (p cos theta - s sin theta, p sin theta + s cos theta, t - s p).
Point3 line_point(const HorizontalLine& l, double s);

/// Residuals of the two planes whose intersection is the line:
/// F1 = cos(theta) x + sin(theta) y - p,
/// F2 = -p sin(theta) x + p cos(theta) y + z - t.
/// q lies on the line iff both vanish.
std::pair<double, double> plane_residuals(const HorizontalLine& l, const Point3& q);

/// Theta-derivatives of F1, F2 along the family at the given point.
std::pair<double, double> plane_theta_derivatives(const FamilySpec& fam, double theta, const Point3& q);

}  // namespace henv
