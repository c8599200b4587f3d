#include "henv/envelope.hpp"

#include <cmath>
#include <limits>

#include "henv/config.hpp"
#include "henv/errors.hpp"
#include "henv/numerics.hpp"

namespace henv {

HeightFunction integrate_t(const SupportFunction& p, double t0, std::span<const double> grid) {
    if (grid.size() < 16) throw Error(ErrorCode::TooFewSamples, "integrate_t needs at least 16 nodes");
    if (!is_uniform(grid)) throw Error(ErrorCode::NonMonotonicGrid, "integrate_t needs a uniform grid");
    std::vector<double> integrand(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double dp = p.d1(grid[i]);
        const double v = p.value(grid[i]);
        integrand[i] = dp * dp - v * v;
    }
    std::vector<double> values = cumulative_trapezoid(grid, integrand);
    // Euler-Maclaurin endpoint correction for the prefix integrals: the
    // composite trapezoid over [0, theta_i] errs by h^2/12 (f'(theta_i) - f'(0)).
    // Full-period quantities are unaffected (the correction telescopes away
    // for periodic integrands); prefix values gain two orders.
    const double h = grid[1] - grid[0];
    auto integrand_d1 = [&p](double th) {
        return 2.0 * (p.d1(th) * p.d2(th) - p.value(th) * p.d1(th));
    };
    const double f1_at_0 = integrand_d1(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        values[i] -= h * h / 12.0 * (integrand_d1(grid[i]) - f1_at_0);
    }
    for (double& v : values) v += t0;
    SupportFunction pc = p;
    return detail::make_node_height(std::vector<double>(grid.begin(), grid.end()), std::move(values),
                                    [pc](double theta) {
                                        const double dp = pc.d1(theta);
                                        const double v = pc.value(theta);
                                        return dp * dp - v * v;
                                    });
}

FamilySpec make_family(const SupportFunction& p, double t0, std::size_t n_intervals) {
    auto grid = uniform_grid(n_intervals);
    HeightFunction t = integrate_t(p, t0, grid);
    return FamilySpec::unchecked(p, std::move(t), std::move(grid));
}

Point3 envelope_point(const SupportFunction& p, const HeightFunction& t, double theta) {
    const double c = std::cos(theta), sn = std::sin(theta);
    const double v = p.value(theta), dp = p.d1(theta);
    return {v * c - dp * sn, v * sn + dp * c, t.value(theta) - dp * v};
}

Curve generate_envelope(const FamilySpec& fam) {
    const double residual = compatibility_residual(fam);
    if (residual > compatibility_tolerance(fam)) {
        throw Error(ErrorCode::CompatibilityViolation,
                    "family violates t' = (p')^2 - p^2 (residual " + std::to_string(residual) + ")");
    }
    const auto& grid = fam.grid;
    const SupportFunction& p = fam.support;
    const bool analytic = (p.kind() == SupportKind::analytic);
    const bool exact_d2 = analytic && p.has_d3();

    std::vector<CurveSample> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double theta = grid[i];
        samples[i].theta = theta;
        samples[i].point = envelope_point(p, fam.height, theta);
        if (analytic) {
            const double c = std::cos(theta), sn = std::sin(theta);
            const double v = p.value(theta), dp = p.d1(theta), ddp = p.d2(theta);
            const double u = v + ddp;  // radius of curvature of the projection
            samples[i].d1 = Point3{-sn * u, c * u, -v * v - v * ddp};
            if (exact_d2) {
                const double du = dp + p.d3(theta);
                samples[i].d2 = Point3{-c * u - sn * du, -sn * u + c * du,
                                       -2.0 * v * dp - dp * ddp - v * p.d3(theta)};
            }
        }
    }
    Curve curve(std::move(samples));

    if (!analytic) {
        curve = with_estimated_derivatives(curve, true);
    } else if (!exact_d2) {
        // differentiate the analytic first-derivative samples
        std::vector<double> dxs(grid.size()), dys(grid.size()), dzs(grid.size());
        auto s = curve.samples();
        for (std::size_t i = 0; i < s.size(); ++i) {
            dxs[i] = s[i].d1->x;
            dys[i] = s[i].d1->y;
            dzs[i] = s[i].d1->z;
        }
        const auto ddx = fd_derivative(grid, dxs, 1), ddy = fd_derivative(grid, dys, 1),
                   ddz = fd_derivative(grid, dzs, 1);
        for (std::size_t i = 0; i < s.size(); ++i) s[i].d2 = Point3{ddx[i], ddy[i], ddz[i]};
        curve = Curve(std::move(s));
    }
    return curve;
}

std::vector<char> degenerate_radius_mask(const SupportFunction& p, std::span<const double> grid) {
    const double floor = tols().radius_floor;
    std::vector<double> u(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) u[i] = p.value(grid[i]) + p.d2(grid[i]);
    std::vector<char> mask(grid.size(), 0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(u[i]) < floor || u[i] < 0.0) mask[i] = 1;
        if (i > 0 && u[i - 1] * u[i] < 0.0) {
            mask[i - 1] = 1;
            mask[i] = 1;
        }
    }
    return mask;
}

std::vector<double> curvature_closed_form(const SupportFunction& p, std::span<const double> grid) {
    const double floor = tols().radius_floor;
    std::vector<double> k(grid.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = p.value(grid[i]) + p.d2(grid[i]);
        if (std::abs(u) < floor || (i > 0 && prev * u < 0.0)) {
            throw Error(ErrorCode::DegenerateRadius, "p + p'' vanishes on the grid (envelope cusp)");
        }
        k[i] = 1.0 / u;
        prev = u;
    }
    return k;
}

double horizontal_length(const SupportFunction& p, std::span<const double> grid) {
    std::vector<double> integrand(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        integrand[i] = std::abs(p.value(grid[i]) + p.d2(grid[i]));
    }
    const double direct = trapezoid(grid, integrand);
    // cross-check through the radius-of-curvature form when nondegenerate
    bool degenerate = false;
    for (char m : degenerate_radius_mask(p, grid)) degenerate = degenerate || (m != 0);
    if (!degenerate) {
        const auto k = curvature_closed_form(p, grid);
        std::vector<double> radii(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) radii[i] = 1.0 / std::abs(k[i]);
        const double via_curvature = trapezoid(grid, radii);
        if (std::abs(via_curvature - direct) > 1e-9 * (1.0 + std::abs(direct))) {
            throw Error(ErrorCode::InvalidParameter, "length routes disagree beyond rounding");
        }
    }
    return direct;
}

double santalo_area(const SupportFunction& p, std::span<const double> grid) {
    if (!p.periodic()) throw Error(ErrorCode::NotPeriodic, "Santalo area needs a periodic support");
    std::vector<double> integrand(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = p.value(grid[i]), dp = p.d1(grid[i]);
        integrand[i] = v * v - dp * dp;
    }
    return 0.5 * trapezoid(grid, integrand);
}

ClosednessResult closedness_check(const SupportFunction& p, const HeightFunction& t, std::size_t n_intervals) {
    if (!p.periodic()) throw Error(ErrorCode::NotPeriodic, "closedness check needs a periodic support");
    const auto grid = uniform_grid(n_intervals);
    std::vector<double> integrand(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = p.value(grid[i]), ddp = p.d2(grid[i]);
        integrand[i] = v * v + v * ddp;
    }
    ClosednessResult res;
    res.z_drop = -trapezoid(grid, integrand);
    res.area_F = santalo_area(p, grid);
    res.identity_residual = std::abs(res.z_drop + 2.0 * res.area_F);
    const double t0 = t.value(0.0);
    res.closed = std::abs(res.z_drop) <= tols().closed_base * (1.0 + std::abs(t0));
    return res;
}

InvariantReport compute_invariants(const FamilySpec& fam, const Curve& curve) {
    InvariantReport rep;
    const auto& grid = fam.grid;
    const double floor = tols().radius_floor;
    rep.k.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = fam.support.value(grid[i]) + fam.support.d2(grid[i]);
        rep.k[i] = (std::abs(u) < floor) ? std::numeric_limits<double>::quiet_NaN() : 1.0 / u;
    }
    rep.length = horizontal_length(fam.support, grid);
    rep.area_F = fam.support.periodic() ? santalo_area(fam.support, grid)
                                        : std::numeric_limits<double>::quiet_NaN();

    double res_sup = 0.0, tau_sup = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto& s = curve[i];
        if (!s.d1) throw Error(ErrorCode::MissingDerivatives, "curve lacks derivative estimates");
        const double r = s.d1->z - s.d1->x * s.point.y + s.point.x * s.d1->y;
        res_sup = std::max(res_sup, std::abs(r));
        const double speed2 = s.d1->x * s.d1->x + s.d1->y * s.d1->y;
        if (speed2 >= tols().eps_reg) {
            tau_sup = std::max(tau_sup, std::abs(r) / std::sqrt(speed2));
        }
    }
    rep.horiz_residual_sup = res_sup;
    rep.tau_sup = tau_sup;
    rep.z_drop = curve[curve.size() - 1].point.z - curve[0].point.z;
    return rep;
}

}  // namespace henv
