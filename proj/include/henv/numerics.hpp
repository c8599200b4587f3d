#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace henv {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// n_intervals+1 uniformly spaced nodes covering [0, 2pi], both endpoints included.
std::vector<double> uniform_grid(std::size_t n_intervals);

/// True when the nodes are uniformly spaced to within rel_tol of the mean spacing.
bool is_uniform(std::span<const double> grid, double rel_tol = 1e-9);

/// Composite trapezoid of the samples f over the (possibly non-uniform) grid.
double trapezoid(std::span<const double> grid, std::span<const double> f);

/// Prefix integrals of f over the grid by the composite trapezoid rule with
/// compensated accumulation; out[0] = 0.
std::vector<double> cumulative_trapezoid(std::span<const double> grid, std::span<const double> f);

/// Fornberg weights for the m-th derivative at x0 from the given stencil nodes.
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int order);

/// m-th derivative estimates of the sampled function at every grid node.
/// Uses a sliding window of `window` nearest nodes (one-sided at the ends, or
/// wrapped with period 2pi when `periodic`). Defaults give 4th-order accuracy
/// in the interior and at the boundary.
std::vector<double> fd_derivative(std::span<const double> grid, std::span<const double> values,
                                  int order, bool periodic = false, std::size_t window = 0);

/// Cubic Hermite value on [x0,x1] with endpoint values/slopes.
double hermite_value(double x, double x0, double x1, double f0, double f1, double d0, double d1);
/// First and second derivative of the same interpolant.
double hermite_d1(double x, double x0, double x1, double f0, double f1, double d0, double d1);
double hermite_d2(double x, double x0, double x1, double f0, double f1, double d0, double d1);

/// Index i with grid[i] <= x <= grid[i+1] (clamped to the last interval).
std::size_t locate_interval(std::span<const double> grid, double x);

/// Signed polygon area by the shoelace formula; vertices in order, closed implicitly.
double shoelace_area(std::span<const double> x, std::span<const double> y);

/// Compensated (Kahan) sum of the samples.
double kahan_sum(std::span<const double> values);

}  // namespace henv
