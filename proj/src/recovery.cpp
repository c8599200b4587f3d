#include "henv/recovery.hpp"

#include <cmath>
#include <limits>

#include "henv/config.hpp"
#include "henv/errors.hpp"
#include "henv/numerics.hpp"

namespace henv {

FamilySpec recover_family(const Curve& c) {
    const auto residuals = horizontality_residual(c);  // throws MissingDerivatives
    for (const auto& s : c.samples()) {
        const double speed2 = s.d1->x * s.d1->x + s.d1->y * s.d1->y;
        if (speed2 < tols().eps_reg) {
            throw Error(ErrorCode::NotHorizontallyRegular, "projected speed vanishes");
        }
    }
    for (double r : residuals) {
        if (std::abs(r) > tols().horizontal) {
            throw Error(ErrorCode::NotHorizontal, "curve is not horizontal within tolerance");
        }
    }

    const std::size_t n = c.size();
    std::vector<double> thetas(n), ps(n), ts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = c[i];
        const Point3& d = *s.d1;
        // tangent direction is (-sin, cos) up to sign
        const double raw = std::atan2(-d.x, d.y);
        double theta;
        const double eps_p = 1e-9 * (1.0 + std::abs(s.point.x) + std::abs(s.point.y));
        auto support_at = [&](double th) { return s.point.x * std::cos(th) + s.point.y * std::sin(th); };
        if (i == 0) {
            // pick the branch (raw or raw+pi, translated by 2 pi k) that keeps
            // p >= 0 and lands nearest the curve's own starting parameter
            const double half = kTwoPi / 2.0;
            theta = raw;
            double best_gap = std::numeric_limits<double>::infinity();
            for (double cand : {raw, raw + half}) {
                const double shifted = cand + kTwoPi * std::round((s.theta - cand) / kTwoPi);
                const double gap = std::abs(shifted - s.theta);
                if (support_at(shifted) >= -eps_p && gap < best_gap) {
                    best_gap = gap;
                    theta = shifted;
                }
            }
        } else {
            const double half = kTwoPi / 2.0;
            const double k = std::round((thetas[i - 1] - raw) / half);
            theta = raw + k * half;
            if (support_at(theta) < -eps_p) {
                theta += (theta <= thetas[i - 1]) ? half : -half;
            }
        }
        const double p = support_at(theta);
        if (p < -eps_p) {
            throw Error(ErrorCode::NegativeSupportUnresolvable,
                        "no theta branch keeps the support nonnegative");
        }
        thetas[i] = theta;
        ps[i] = std::max(p, 0.0);
        ts[i] = s.point.z + (-s.point.x * std::sin(theta) + s.point.y * std::cos(theta)) * p;
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(thetas[i] > thetas[i - 1])) {
            throw Error(ErrorCode::NonMonotonicGrid, "recovered theta sequence is not increasing");
        }
    }
    SupportFunction support = detail::make_hermite_support(thetas, ps, false);
    HeightFunction height = make_sampled_height(thetas, ts);
    return FamilySpec::checked(std::move(support), std::move(height), std::move(thetas));
}

double fd_compatibility_residual(const FamilySpec& fam) {
    const auto& grid = fam.grid;
    std::vector<double> ps(grid.size()), ts(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        ps[i] = fam.support.value(grid[i]);
        ts[i] = fam.height.value(grid[i]);
    }
    const auto dp = fd_derivative(grid, ps, 1);
    const auto dt = fd_derivative(grid, ts, 1);
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        sup = std::max(sup, std::abs(dt[i] - (dp[i] * dp[i] - ps[i] * ps[i])));
    }
    return sup;
}

Curve oracle_envelope(const FamilySpec& fam) {
    const auto& grid = fam.grid;
    if (grid.size() < 64) throw Error(ErrorCode::InvalidParameter, "oracle needs a grid of at least 64 nodes");

    std::vector<CurveSample> samples;
    samples.reserve(grid.size() - 1);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double th0 = grid[i], th1 = grid[i + 1];
        const double c0 = std::cos(th0), s0 = std::sin(th0);
        const double c1 = std::cos(th1), s1 = std::sin(th1);
        const double det = std::sin(th1 - th0);
        if (std::abs(det) < tols().eps_reg) {
            throw Error(ErrorCode::ParallelLines, "consecutive support lines are parallel");
        }
        const double p0 = fam.support.value(th0), p1 = fam.support.value(th1);
        // [c0 s0; c1 s1] (x,y)^T = (p0, p1)^T
        const double x = (p0 * s1 - p1 * s0) / det;
        const double y = (p1 * c0 - p0 * c1) / det;
        const double t0 = fam.height.value(th0), t1 = fam.height.value(th1);
        const double sa = -x * s0 + y * c0;
        const double sb = -x * s1 + y * c1;
        const double z = 0.5 * ((t0 - sa * p0) + (t1 - sb * p1));
        samples.push_back(CurveSample{0.5 * (th0 + th1), Point3{x, y, z}, std::nullopt, std::nullopt});
    }
    return with_estimated_derivatives(Curve(std::move(samples)), true);
}

std::vector<double> tangency_check(const FamilySpec& fam, const Curve& c) {
    const auto& grid = fam.grid;
    if (grid.size() != c.size()) throw Error(ErrorCode::GridMismatch, "family and curve grids differ in size");
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(grid[i] - c[i].theta) > 1e-9 * (1.0 + std::abs(grid[i]))) {
            throw Error(ErrorCode::GridMismatch, "family and curve grids differ");
        }
        const double theta = grid[i];
        const HorizontalLine line{fam.support.value(theta), theta, fam.height.value(theta)};
        const auto [f1, f2] = plane_residuals(line, c[i].point);
        if (!c[i].d1) throw Error(ErrorCode::MissingDerivatives, "curve lacks derivative estimates");
        const double dx = c[i].d1->x, dy = c[i].d1->y;
        const double speed = std::sqrt(dx * dx + dy * dy);
        if (speed * speed < tols().eps_reg) {
            throw Error(ErrorCode::NotHorizontallyRegular, "projected speed vanishes");
        }
        const double align = 1.0 - std::abs(-dx * std::sin(theta) + dy * std::cos(theta)) / speed;
        out[i] = std::max({std::abs(f1), std::abs(f2), std::abs(align)});
    }
    return out;
}

}  // namespace henv
