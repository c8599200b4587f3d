#include "henv/line_family.hpp"

#include <cmath>

#include "henv/config.hpp"
#include "henv/errors.hpp"

namespace henv {

namespace {

void validate_grid(const std::vector<double>& grid) {
    if (grid.size() < 16) throw Error(ErrorCode::TooFewSamples, "family grid needs at least 16 nodes");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw Error(ErrorCode::NonMonotonicGrid, "family grid must be strictly increasing");
    }
}

}  // namespace

FamilySpec FamilySpec::unchecked(SupportFunction support, HeightFunction height, std::vector<double> grid) {
    validate_grid(grid);
    return FamilySpec{std::move(support), std::move(height), std::move(grid)};
}

FamilySpec FamilySpec::checked(SupportFunction support, HeightFunction height, std::vector<double> grid) {
    FamilySpec fam = unchecked(std::move(support), std::move(height), std::move(grid));
    const double residual = compatibility_residual(fam);
    if (residual > compatibility_tolerance(fam)) {
        throw Error(ErrorCode::CompatibilityViolation,
                    "height does not satisfy t' = (p')^2 - p^2 (residual " + std::to_string(residual) + ")");
    }
    return fam;
}

double compatibility_residual(const FamilySpec& fam) {
    double sup = 0.0;
    for (double theta : fam.grid) {
        const double p = fam.support.value(theta);
        const double dp = fam.support.d1(theta);
        const double r = fam.height.d1(theta) - (dp * dp - p * p);
        sup = std::max(sup, std::abs(r));
    }
    return sup;
}

double compatibility_scale(const FamilySpec& fam) {
    double sup = 0.0;
    for (double theta : fam.grid) {
        const double p = fam.support.value(theta);
        const double dp = fam.support.d1(theta);
        sup = std::max(sup, std::abs(fam.height.d1(theta)) + p * p + dp * dp);
    }
    return 1.0 + sup;
}

double compatibility_tolerance(const FamilySpec& fam) {
    const double base = (fam.support.kind() == SupportKind::analytic) ? tols().compat_analytic
                                                                      : tols().compat_sampled;
    return base * compatibility_scale(fam);
}

Point3 line_point(const HorizontalLine& l, double s) {
    const double c = std::cos(l.theta), sn = std::sin(l.theta);
    return {l.p * c - s * sn, l.p * sn + s * c, l.t - s * l.p};
}

std::pair<double, double> plane_residuals(const HorizontalLine& l, const Point3& q) {
    const double c = std::cos(l.theta), sn = std::sin(l.theta);
    const double f1 = c * q.x + sn * q.y - l.p;
    const double f2 = -l.p * sn * q.x + l.p * c * q.y + q.z - l.t;
    return {f1, f2};
}

std::pair<double, double> plane_theta_derivatives(const FamilySpec& fam, double theta, const Point3& q) {
    const double c = std::cos(theta), sn = std::sin(theta);
    const double p = fam.support.value(theta);
    const double dp = fam.support.d1(theta);
    const double dt = fam.height.d1(theta);
    const double df1 = -q.x * sn + q.y * c - dp;
    const double df2 = (-dp * sn - p * c) * q.x + (dp * c - p * sn) * q.y - dt;
    return {df1, df2};
}

}  // namespace henv
