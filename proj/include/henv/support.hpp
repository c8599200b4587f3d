#pragma once

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace henv {

enum class SupportKind { analytic, sampled };

namespace detail {
class SupportImpl;
class HeightImpl;
}  // namespace detail

/// Support function p(theta) on [0, 2pi] together with its first two
/// derivatives. Immutable; cheap to copy; safe to evaluate concurrently.
///
/// Evaluation outside the domain throws DomainError unless the function is
/// periodic, in which case theta is wrapped mod 2pi.
class SupportFunction {
  public:
    double value(double theta) const;
    double d1(double theta) const;
    double d2(double theta) const;

    /// Third derivative, available for the analytic presets. Used to attach
    /// exact second derivatives to generated envelopes.
    bool has_d3() const;
    double d3(double theta) const;

    SupportKind kind() const;
    bool periodic() const;
    double domain_min() const;
    double domain_max() const;

    /// Minimum of p over the dense validation grid recorded at construction.
    double recorded_min() const;

    explicit SupportFunction(std::shared_ptr<const detail::SupportImpl> impl);

  private:
    std::shared_ptr<const detail::SupportImpl> impl_;
};

/// Height function t(theta) with its derivative. Same immutability and
/// domain conventions as SupportFunction (heights are never periodic).
class HeightFunction {
  public:
    double value(double theta) const;
    double d1(double theta) const;
    double domain_min() const;
    double domain_max() const;

    explicit HeightFunction(std::shared_ptr<const detail::HeightImpl> impl);

  private:
    std::shared_ptr<const detail::HeightImpl> impl_;
};

/// Trigonometric polynomial p(theta) = a0 + sum_k (a_k cos k theta + b_k sin k theta)
/// with exact derivatives. Throws NegativeSupport when p dips below zero on a
/// 4096-point dense grid.
SupportFunction make_trig_poly(double a0, const std::vector<std::pair<double, double>>& coeffs);

/// Exponential preset p(theta) = c e^{a theta}; p' = a p, p'' = a^2 p.
/// Requires c > 0 and a != 0.
SupportFunction make_exponential(double c, double a);

/// Interpolant through sampled (theta, p) data covering [0, 2pi]:
/// piecewise-cubic Hermite with finite-difference node slopes (periodic
/// stencils when the periodic flag is set). Requires a strictly increasing
/// grid of at least 8 nodes and p >= 0 everywhere.
SupportFunction make_sampled(std::span<const double> theta, std::span<const double> p, bool periodic);

/// p1 + p2 with summed derivatives.
SupportFunction add_supports(const SupportFunction& p1, const SupportFunction& p2);

/// Height from an explicit evaluator pair (used by presets and tests).
HeightFunction make_analytic_height(std::function<double(double)> value,
                                    std::function<double(double)> d1,
                                    double domain_min = 0.0, double domain_max = 6.283185307179586476925286766559);

/// Hermite interpolant through sampled (theta, t) data with FD slopes.
HeightFunction make_sampled_height(std::span<const double> theta, std::span<const double> t);

/// t1 + t2.
HeightFunction add_heights(const HeightFunction& t1, const HeightFunction& t2);

namespace detail {

/// Hermite support over an arbitrary strictly increasing grid (no coverage or
/// node-count requirements). Backs make_sampled, recovery output, and the
/// exponential partner construction.
SupportFunction make_hermite_support(std::vector<double> grid, std::vector<double> values, bool periodic);

/// Support represented in log space: p = exp(L) with L interpolated by a
/// Hermite cubic whose slopes g are supplied exactly, so that
/// p' = p * L'(theta). gp supplies g' for second derivatives.
SupportFunction make_log_hermite_support(std::vector<double> grid, std::vector<double> log_values,
                                         std::vector<double> g, std::vector<double> gp);

/// Height carried by node values plus an exact derivative functional;
/// interpolation between nodes is cubic Hermite with that derivative.
HeightFunction make_node_height(std::vector<double> grid, std::vector<double> values,
                                std::function<double(double)> derivative);

}  // namespace detail

}  // namespace henv
