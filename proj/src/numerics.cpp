#include "henv/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "henv/errors.hpp"

namespace henv {

std::vector<double> uniform_grid(std::size_t n_intervals) {
    if (n_intervals < 2) throw Error(ErrorCode::InvalidParameter, "grid needs at least 2 intervals");
    std::vector<double> grid(n_intervals + 1);
    for (std::size_t i = 0; i <= n_intervals; ++i) {
        grid[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n_intervals);
    }
    grid.back() = kTwoPi;
    return grid;
}

bool is_uniform(std::span<const double> grid, double rel_tol) {
    if (grid.size() < 3) return true;
    const double h = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (std::abs((grid[i] - grid[i - 1]) - h) > rel_tol * std::abs(h)) return false;
    }
    return true;
}

double trapezoid(std::span<const double> grid, std::span<const double> f) {
    if (grid.size() != f.size() || grid.size() < 2) {
        throw Error(ErrorCode::InvalidParameter, "trapezoid needs matching arrays of size >= 2");
    }
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double term = 0.5 * (f[i] + f[i - 1]) * (grid[i] - grid[i - 1]);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

std::vector<double> cumulative_trapezoid(std::span<const double> grid, std::span<const double> f) {
    if (grid.size() != f.size() || grid.size() < 2) {
        throw Error(ErrorCode::InvalidParameter, "cumulative_trapezoid needs matching arrays of size >= 2");
    }
    std::vector<double> out(grid.size());
    out[0] = 0.0;
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double term = 0.5 * (f[i] + f[i - 1]) * (grid[i] - grid[i - 1]);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        out[i] = sum;
    }
    return out;
}

// Fornberg (1988), generation of finite difference formulas on arbitrary nodes.
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int order) {
    const std::size_t n = nodes.size();
    if (n == 0 || order < 0 || static_cast<std::size_t>(order) >= n) {
        throw Error(ErrorCode::InvalidParameter, "fd_weights: need more nodes than the derivative order");
    }
    const int m = order;
    std::vector<double> c(n * static_cast<std::size_t>(m + 1), 0.0);
    auto C = [&](std::size_t i, int k) -> double& { return c[i * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(k)]; };

    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    C(0, 0) = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const int mn = std::min<int>(static_cast<int>(i), m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - x0;
        for (std::size_t j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    C(i, k) = c1 * (k * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
                }
                C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k) {
                C(j, k) = (c4 * C(j, k) - k * C(j, k - 1)) / c3;
            }
            C(j, 0) = c4 * C(j, 0) / c3;
        }
        c1 = c2;
    }

    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = C(i, m);
    return w;
}

std::vector<double> fd_derivative(std::span<const double> grid, std::span<const double> values,
                                  int order, bool periodic, std::size_t window) {
    const std::size_t n = grid.size();
    if (n != values.size()) throw Error(ErrorCode::InvalidParameter, "fd_derivative: size mismatch");
    if (window == 0) window = (order >= 2) ? 7 : 5;
    if (window > n) window = n;
    if (window <= static_cast<std::size_t>(order)) {
        throw Error(ErrorCode::TooFewSamples, "fd_derivative: window too small for requested order");
    }

    std::vector<double> out(n);
    std::vector<double> xs(window), fs(window);
    const std::size_t half = window / 2;

    for (std::size_t i = 0; i < n; ++i) {
        if (periodic) {
            // wrap indices; the final node duplicates the first, so the seam
            // period uses n-1 distinct samples
            const std::size_t distinct = n - 1;
            for (std::size_t k = 0; k < window; ++k) {
                const std::ptrdiff_t raw = static_cast<std::ptrdiff_t>(i + k) - static_cast<std::ptrdiff_t>(half);
                std::ptrdiff_t idx = raw % static_cast<std::ptrdiff_t>(distinct);
                double shift = 0.0;
                if (idx < 0) {
                    idx += static_cast<std::ptrdiff_t>(distinct);
                    shift = -kTwoPi;
                }
                if (raw >= static_cast<std::ptrdiff_t>(distinct)) shift = kTwoPi;
                xs[k] = grid[static_cast<std::size_t>(idx)] + shift;
                fs[k] = values[static_cast<std::size_t>(idx)];
            }
        } else {
            std::size_t start = (i > half) ? i - half : 0;
            if (start + window > n) start = n - window;
            for (std::size_t k = 0; k < window; ++k) {
                xs[k] = grid[start + k];
                fs[k] = values[start + k];
            }
        }
        const auto w = fd_weights(grid[i], xs, order);
        double acc = 0.0;
        for (std::size_t k = 0; k < window; ++k) acc += w[k] * fs[k];
        out[i] = acc;
    }
    return out;
}

double hermite_value(double x, double x0, double x1, double f0, double f1, double d0, double d1) {
    const double h = x1 - x0;
    const double s = (x - x0) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    return f0 * (2 * s3 - 3 * s2 + 1) + f1 * (-2 * s3 + 3 * s2) + h * (d0 * (s3 - 2 * s2 + s) + d1 * (s3 - s2));
}

double hermite_d1(double x, double x0, double x1, double f0, double f1, double d0, double d1) {
    const double h = x1 - x0;
    const double s = (x - x0) / h;
    const double s2 = s * s;
    return (f0 * (6 * s2 - 6 * s) + f1 * (-6 * s2 + 6 * s)) / h + d0 * (3 * s2 - 4 * s + 1) + d1 * (3 * s2 - 2 * s);
}

double hermite_d2(double x, double x0, double x1, double f0, double f1, double d0, double d1) {
    const double h = x1 - x0;
    const double s = (x - x0) / h;
    return (f0 * (12 * s - 6) + f1 * (-12 * s + 6)) / (h * h) + (d0 * (6 * s - 4) + d1 * (6 * s - 2)) / h;
}

std::size_t locate_interval(std::span<const double> grid, double x) {
    if (grid.size() < 2) throw Error(ErrorCode::InvalidParameter, "locate_interval: empty grid");
    auto it = std::upper_bound(grid.begin(), grid.end(), x);
    std::ptrdiff_t i = std::distance(grid.begin(), it) - 1;
    i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(grid.size()) - 2);
    return static_cast<std::size_t>(i);
}

double shoelace_area(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 3) {
        throw Error(ErrorCode::InvalidParameter, "shoelace_area needs >= 3 vertices");
    }
    double sum = 0.0, comp = 0.0;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double term = x[i] * y[j] - x[j] * y[i];
        const double yv = term - comp;
        const double t = sum + yv;
        comp = (t - sum) - yv;
        sum = t;
    }
    return 0.5 * sum;
}

double kahan_sum(std::span<const double> values) {
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace henv
