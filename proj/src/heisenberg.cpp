#include "henv/heisenberg.hpp"

#include <cmath>

#include "henv/config.hpp"
#include "henv/errors.hpp"
#include "henv/numerics.hpp"

namespace henv {

Point3 group_op(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z + a.y * b.x - a.x * b.y};
}

Point3 group_inverse(const Point3& p) { return {-p.x, -p.y, -p.z}; }

Curve::Curve(std::vector<CurveSample> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 8) throw Error(ErrorCode::TooFewSamples, "curve needs at least 8 samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Point3& q = samples_[i].point;
        if (!std::isfinite(q.x) || !std::isfinite(q.y) || !std::isfinite(q.z) || !std::isfinite(samples_[i].theta)) {
            throw Error(ErrorCode::InvalidParameter, "curve sample is not finite");
        }
        if (i > 0 && !(samples_[i].theta > samples_[i - 1].theta)) {
            throw Error(ErrorCode::NonMonotonicGrid, "curve theta grid must be strictly increasing");
        }
    }
}

std::vector<double> Curve::thetas() const {
    std::vector<double> out(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) out[i] = samples_[i].theta;
    return out;
}
std::vector<double> Curve::xs() const {
    std::vector<double> out(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) out[i] = samples_[i].point.x;
    return out;
}
std::vector<double> Curve::ys() const {
    std::vector<double> out(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) out[i] = samples_[i].point.y;
    return out;
}
std::vector<double> Curve::zs() const {
    std::vector<double> out(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) out[i] = samples_[i].point.z;
    return out;
}

Curve with_estimated_derivatives(const Curve& c, bool second) {
    const auto grid = c.thetas();
    const auto x = c.xs(), y = c.ys(), z = c.zs();
    const auto dx = fd_derivative(grid, x, 1), dy = fd_derivative(grid, y, 1), dz = fd_derivative(grid, z, 1);
    std::vector<double> ddx, ddy, ddz;
    if (second) {
        ddx = fd_derivative(grid, x, 2);
        ddy = fd_derivative(grid, y, 2);
        ddz = fd_derivative(grid, z, 2);
    }
    std::vector<CurveSample> samples = c.samples();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i].d1 = Point3{dx[i], dy[i], dz[i]};
        if (second) samples[i].d2 = Point3{ddx[i], ddy[i], ddz[i]};
    }
    return Curve(std::move(samples));
}

Curve with_estimated_second_derivatives(const Curve& c) {
    const auto grid = c.thetas();
    std::vector<double> dx(c.size()), dy(c.size()), dz(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].d1) throw Error(ErrorCode::MissingDerivatives, "curve sample lacks first-derivative estimates");
        dx[i] = c[i].d1->x;
        dy[i] = c[i].d1->y;
        dz[i] = c[i].d1->z;
    }
    const auto ddx = fd_derivative(grid, dx, 1), ddy = fd_derivative(grid, dy, 1), ddz = fd_derivative(grid, dz, 1);
    std::vector<CurveSample> samples = c.samples();
    for (std::size_t i = 0; i < samples.size(); ++i) samples[i].d2 = Point3{ddx[i], ddy[i], ddz[i]};
    return Curve(std::move(samples));
}

Curve left_translate(const Point3& p, const Curve& c) {
    bool had_d1 = false, had_d2 = false;
    std::vector<CurveSample> samples = c.samples();
    for (auto& s : samples) {
        had_d1 = had_d1 || s.d1.has_value();
        had_d2 = had_d2 || s.d2.has_value();
        s.point = group_op(p, s.point);
        s.d1.reset();
        s.d2.reset();
    }
    Curve translated(std::move(samples));
    if (had_d1 || had_d2) translated = with_estimated_derivatives(translated, had_d2);
    return translated;
}

namespace {

const Point3& require_d1(const CurveSample& s) {
    if (!s.d1) throw Error(ErrorCode::MissingDerivatives, "curve sample lacks first-derivative estimates");
    return *s.d1;
}

}  // namespace

std::vector<double> horizontality_residual(const Curve& c) {
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& s = c[i];
        const Point3& d = require_d1(s);
        out[i] = d.z - d.x * s.point.y + s.point.x * d.y;
    }
    return out;
}

std::vector<double> p_curvature(const Curve& c) {
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& s = c[i];
        const Point3& d = require_d1(s);
        if (!s.d2) throw Error(ErrorCode::MissingDerivatives, "p_curvature needs second-derivative estimates");
        const double speed2 = d.x * d.x + d.y * d.y;
        if (speed2 < tols().eps_reg) {
            throw Error(ErrorCode::NotHorizontallyRegular, "projected speed vanishes");
        }
        out[i] = (d.x * s.d2->y - s.d2->x * d.y) / (speed2 * std::sqrt(speed2));
    }
    return out;
}

std::vector<double> contact_normality(const Curve& c) {
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& s = c[i];
        const Point3& d = require_d1(s);
        const double speed2 = d.x * d.x + d.y * d.y;
        if (speed2 < tols().eps_reg) {
            throw Error(ErrorCode::NotHorizontallyRegular, "projected speed vanishes");
        }
        out[i] = (d.z - d.x * s.point.y + s.point.x * d.y) / std::sqrt(speed2);
    }
    return out;
}

bool is_horizontal(const Curve& c, double tol) {
    if (tol < 0.0) tol = tols().horizontal;
    for (double r : horizontality_residual(c)) {
        if (std::abs(r) > tol) return false;
    }
    return true;
}

}  // namespace henv
