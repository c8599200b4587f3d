#include "henv/construction.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "henv/config.hpp"
#include "henv/errors.hpp"
#include "henv/numerics.hpp"

namespace henv {

namespace {

double pair_tolerance(double sup_p1, double sup_p2) {
    return tols().pair_base * (1.0 + sup_p1 * sup_p2);
}

/// +1 / -1 when every sample has that strict sign, 0 otherwise.
int constant_sign(const std::vector<double>& values) {
    bool pos = true, neg = true;
    for (double v : values) {
        pos = pos && (v > 0.0);
        neg = neg && (v < 0.0);
    }
    if (pos) return 1;
    if (neg) return -1;
    return 0;
}

}  // namespace

FamilySpec sum_family(const FamilySpec& f1, const FamilySpec& f2) {
    if (f1.grid.size() != f2.grid.size()) throw Error(ErrorCode::GridMismatch, "family grids differ in size");
    for (std::size_t i = 0; i < f1.grid.size(); ++i) {
        if (std::abs(f1.grid[i] - f2.grid[i]) > 1e-12 * (1.0 + std::abs(f1.grid[i]))) {
            throw Error(ErrorCode::GridMismatch, "family grids differ");
        }
    }
    return FamilySpec::unchecked(add_supports(f1.support, f2.support),
                                 add_heights(f1.height, f2.height), f1.grid);
}

PairReport check_pair_condition(const SupportFunction& p1, const SupportFunction& p2,
                                std::span<const double> grid) {
    PairReport rep;
    rep.interval = {grid.front(), grid.back()};
    double sup1 = 0.0, sup2 = 0.0;
    for (double theta : grid) {
        const double v1 = p1.value(theta), v2 = p2.value(theta);
        const double r = v1 * v2 - p1.d1(theta) * p2.d1(theta);
        rep.residual_sup = std::max(rep.residual_sup, std::abs(r));
        sup1 = std::max(sup1, std::abs(v1));
        sup2 = std::max(sup2, std::abs(v2));
    }
    rep.admissible = rep.residual_sup <= pair_tolerance(sup1, sup2);
    return rep;
}

PairReport classify_pair(const SupportFunction& p1, const SupportFunction& p2, double a, double b,
                         std::size_t dense_intervals) {
    if (!(b > a)) throw Error(ErrorCode::InvalidParameter, "classify_pair needs a < b");
    std::vector<double> grid(dense_intervals + 1);
    for (std::size_t i = 0; i <= dense_intervals; ++i) {
        grid[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(dense_intervals);
    }

    std::vector<double> v1(grid.size()), v2(grid.size()), d1a(grid.size()), d1b(grid.size()),
        d2a(grid.size()), d2b(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        v1[i] = p1.value(grid[i]);
        v2[i] = p2.value(grid[i]);
        d1a[i] = p1.d1(grid[i]);
        d1b[i] = p2.d1(grid[i]);
        d2a[i] = p1.d2(grid[i]);
        d2b[i] = p2.d2(grid[i]);
    }
    if (constant_sign(v1) != 1 || constant_sign(v2) != 1) {
        throw Error(ErrorCode::PreconditionNotConstantSign, "p1, p2 must be positive on [a, b]");
    }

    PairReport rep = check_pair_condition(p1, p2, grid);
    rep.interval = {a, b};
    rep.observed_signs.p1_d1 = constant_sign(d1a);
    rep.observed_signs.p2_d1 = constant_sign(d1b);
    rep.observed_signs.p2_d2 = constant_sign(d2b);
    rep.observed_signs.p1_d2 = constant_sign(d2a);
    if (rep.observed_signs.p1_d1 == 0 || rep.observed_signs.p2_d1 == 0 || rep.observed_signs.p2_d2 == 0) {
        throw Error(ErrorCode::PreconditionNotConstantSign,
                    "p1', p2', p2'' must have constant nonzero sign on [a, b]");
    }

    const int s1 = rep.observed_signs.p1_d1, s2 = rep.observed_signs.p2_d1, s22 = rep.observed_signs.p2_d2;
    int concluded = 0;
    if (s1 > 0 && s2 > 0 && s22 < 0) {
        rep.case_label = 1;
        concluded = 1;
    } else if (s1 > 0 && s2 > 0 && s22 > 0) {
        rep.case_label = 2;
        concluded = 1;
    } else if (s1 < 0 && s2 < 0 && s22 < 0) {
        rep.case_label = 3;
        concluded = 1;
    } else if (s1 < 0 && s2 < 0 && s22 > 0) {
        rep.case_label = 4;
        concluded = -1;
    }
    if (rep.case_label != 0) {
        rep.conclusion_holds = (rep.observed_signs.p1_d2 == concluded);
    }
    return rep;
}

SupportFunction exponential_partner(const SupportFunction& p2, double p1_at_a, double a, double b,
                                    std::span<const double> grid) {
    if (p1_at_a <= 0.0) throw Error(ErrorCode::InvalidParameter, "p1(a) must be positive");
    if (!(b > a)) throw Error(ErrorCode::InvalidParameter, "need a < b");
    if (grid.size() < 8) throw Error(ErrorCode::TooFewSamples, "partner grid needs at least 8 nodes");
    const double slack = 1e-9 * (1.0 + std::abs(a) + std::abs(b));
    if (std::abs(grid.front() - a) > slack || std::abs(grid.back() - b) > slack) {
        throw Error(ErrorCode::DomainError, "grid must span [a, b]");
    }
    const double eps = tols().eps_reg;
    for (std::size_t i = 0; i < 4096; ++i) {
        const double theta = a + (b - a) * static_cast<double>(i) / 4095.0;
        if (std::abs(p2.d1(theta)) < eps) {
            throw Error(ErrorCode::DerivativeVanishes, "p2' vanishes on [a, b]");
        }
    }

    std::vector<double> g(grid.size()), gp(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = p2.value(grid[i]);
        const double d = p2.d1(grid[i]);
        g[i] = v / d;
        gp[i] = 1.0 - v * p2.d2(grid[i]) / (d * d);
    }
    std::vector<double> logv = cumulative_trapezoid(grid, g);
    const double l0 = std::log(p1_at_a);
    for (double& v : logv) v += l0;
    return detail::make_log_hermite_support(std::vector<double>(grid.begin(), grid.end()),
                                            std::move(logv), std::move(g), std::move(gp));
}

}  // namespace henv
