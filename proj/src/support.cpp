#include "henv/support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "henv/config.hpp"
#include "henv/errors.hpp"
#include "henv/numerics.hpp"

namespace henv {

namespace detail {

class SupportImpl {
  public:
    virtual ~SupportImpl() = default;
    virtual double value(double theta) const = 0;
    virtual double d1(double theta) const = 0;
    virtual double d2(double theta) const = 0;
    virtual bool has_d3() const { return false; }
    virtual double d3(double) const { throw Error(ErrorCode::MissingDerivatives, "third derivative unavailable"); }
    virtual SupportKind kind() const = 0;
    virtual bool periodic() const = 0;
    virtual double domain_min() const { return 0.0; }
    virtual double domain_max() const { return kTwoPi; }
    virtual double recorded_min() const { return recorded_min_; }

    /// Maps theta into the domain (mod 2pi when periodic) or throws DomainError.
    double clamp_domain(double theta) const {
        const double lo = domain_min(), hi = domain_max();
        const double slack = 1e-12 * (1.0 + std::abs(theta));
        if (theta >= lo - slack && theta <= hi + slack) {
            return std::clamp(theta, lo, hi);
        }
        if (periodic()) {
            double w = std::fmod(theta, kTwoPi);
            if (w < 0) w += kTwoPi;
            return w;
        }
        throw Error(ErrorCode::DomainError, "theta outside [domain_min, domain_max] of a non-periodic support");
    }

    double recorded_min_ = std::numeric_limits<double>::quiet_NaN();
};

class HeightImpl {
  public:
    virtual ~HeightImpl() = default;
    virtual double value(double theta) const = 0;
    virtual double d1(double theta) const = 0;
    virtual double domain_min() const { return 0.0; }
    virtual double domain_max() const { return kTwoPi; }

    double clamp_domain(double theta) const {
        const double lo = domain_min(), hi = domain_max();
        const double slack = 1e-12 * (1.0 + std::abs(theta));
        if (theta >= lo - slack && theta <= hi + slack) {
            return std::clamp(theta, lo, hi);
        }
        throw Error(ErrorCode::DomainError, "theta outside the height function domain");
    }
};

namespace {

class TrigPolyImpl final : public SupportImpl {
  public:
    TrigPolyImpl(double a0, std::vector<std::pair<double, double>> coeffs)
        : a0_(a0), coeffs_(std::move(coeffs)) {}

    double value(double theta) const override {
        theta = clamp_domain(theta);
        double acc = a0_;
        for (std::size_t k = 1; k <= coeffs_.size(); ++k) {
            const double kk = static_cast<double>(k);
            acc += coeffs_[k - 1].first * std::cos(kk * theta) + coeffs_[k - 1].second * std::sin(kk * theta);
        }
        return acc;
    }
    double d1(double theta) const override { return deriv(theta, 1); }
    double d2(double theta) const override { return deriv(theta, 2); }
    bool has_d3() const override { return true; }
    double d3(double theta) const override { return deriv(theta, 3); }
    SupportKind kind() const override { return SupportKind::analytic; }
    bool periodic() const override { return true; }

  private:
    double deriv(double theta, int order) const {
        theta = clamp_domain(theta);
        double acc = 0.0;
        for (std::size_t k = 1; k <= coeffs_.size(); ++k) {
            const double kk = static_cast<double>(k);
            const double kn = std::pow(kk, order);
            const double a = coeffs_[k - 1].first, b = coeffs_[k - 1].second;
            // d/dtheta rotates (cos, sin) by a quarter period per order
            switch (order % 4) {
                case 1: acc += kn * (-a * std::sin(kk * theta) + b * std::cos(kk * theta)); break;
                case 2: acc += kn * (-a * std::cos(kk * theta) - b * std::sin(kk * theta)); break;
                case 3: acc += kn * (a * std::sin(kk * theta) - b * std::cos(kk * theta)); break;
                default: acc += kn * (a * std::cos(kk * theta) + b * std::sin(kk * theta)); break;
            }
        }
        return acc;
    }

    double a0_;
    std::vector<std::pair<double, double>> coeffs_;
};

class ExponentialImpl final : public SupportImpl {
  public:
    ExponentialImpl(double c, double a) : c_(c), a_(a) {}

    double value(double theta) const override { return c_ * std::exp(a_ * clamp_domain(theta)); }
    double d1(double theta) const override { return a_ * value(theta); }
    double d2(double theta) const override { return a_ * a_ * value(theta); }
    bool has_d3() const override { return true; }
    double d3(double theta) const override { return a_ * a_ * a_ * value(theta); }
    SupportKind kind() const override { return SupportKind::analytic; }
    bool periodic() const override { return false; }

  private:
    double c_, a_;
};

class HermiteSampledImpl final : public SupportImpl {
  public:
    HermiteSampledImpl(std::vector<double> grid, std::vector<double> values, bool periodic)
        : grid_(std::move(grid)), values_(std::move(values)), periodic_(periodic) {
        slopes_ = fd_derivative(grid_, values_, 1, periodic_);
    }

    double value(double theta) const override {
        const auto [i, th] = locate(theta);
        return hermite_value(th, grid_[i], grid_[i + 1], values_[i], values_[i + 1], slopes_[i], slopes_[i + 1]);
    }
    double d1(double theta) const override {
        const auto [i, th] = locate(theta);
        return hermite_d1(th, grid_[i], grid_[i + 1], values_[i], values_[i + 1], slopes_[i], slopes_[i + 1]);
    }
    double d2(double theta) const override {
        const auto [i, th] = locate(theta);
        return hermite_d2(th, grid_[i], grid_[i + 1], values_[i], values_[i + 1], slopes_[i], slopes_[i + 1]);
    }
    SupportKind kind() const override { return SupportKind::sampled; }
    bool periodic() const override { return periodic_; }
    double domain_min() const override { return grid_.front(); }
    double domain_max() const override { return grid_.back(); }

  private:
    std::pair<std::size_t, double> locate(double theta) const {
        const double th = clamp_domain(theta);
        return {locate_interval(grid_, th), th};
    }

    std::vector<double> grid_, values_, slopes_;
    bool periodic_;
};

class LogHermiteImpl final : public SupportImpl {
  public:
    LogHermiteImpl(std::vector<double> grid, std::vector<double> logv, std::vector<double> g, std::vector<double> gp)
        : grid_(std::move(grid)), logv_(std::move(logv)), g_(std::move(g)), gp_(std::move(gp)) {}

    double value(double theta) const override {
        const auto [i, th] = locate(theta);
        return std::exp(hermite_value(th, grid_[i], grid_[i + 1], logv_[i], logv_[i + 1], g_[i], g_[i + 1]));
    }
    double d1(double theta) const override {
        const auto [i, th] = locate(theta);
        const double L1 = hermite_d1(th, grid_[i], grid_[i + 1], logv_[i], logv_[i + 1], g_[i], g_[i + 1]);
        return value(theta) * L1;
    }
    double d2(double theta) const override {
        const auto [i, th] = locate(theta);
        const double L1 = hermite_d1(th, grid_[i], grid_[i + 1], logv_[i], logv_[i + 1], g_[i], g_[i + 1]);
        const double L2 = interp_gp(i, th);
        return value(theta) * (L1 * L1 + L2);
    }
    SupportKind kind() const override { return SupportKind::sampled; }
    bool periodic() const override { return false; }
    double domain_min() const override { return grid_.front(); }
    double domain_max() const override { return grid_.back(); }

  private:
    std::pair<std::size_t, double> locate(double theta) const {
        const double th = clamp_domain(theta);
        return {locate_interval(grid_, th), th};
    }
    // g' is known exactly at nodes; linear interpolation is enough for d2
    double interp_gp(std::size_t i, double th) const {
        const double s = (th - grid_[i]) / (grid_[i + 1] - grid_[i]);
        return gp_[i] * (1.0 - s) + gp_[i + 1] * s;
    }

    std::vector<double> grid_, logv_, g_, gp_;
};

class SumSupportImpl final : public SupportImpl {
  public:
    SumSupportImpl(SupportFunction p1, SupportFunction p2) : p1_(std::move(p1)), p2_(std::move(p2)) {}

    double value(double theta) const override { return p1_.value(theta) + p2_.value(theta); }
    double d1(double theta) const override { return p1_.d1(theta) + p2_.d1(theta); }
    double d2(double theta) const override { return p1_.d2(theta) + p2_.d2(theta); }
    bool has_d3() const override { return p1_.has_d3() && p2_.has_d3(); }
    double d3(double theta) const override { return p1_.d3(theta) + p2_.d3(theta); }
    SupportKind kind() const override {
        return (p1_.kind() == SupportKind::analytic && p2_.kind() == SupportKind::analytic)
                   ? SupportKind::analytic
                   : SupportKind::sampled;
    }
    bool periodic() const override { return p1_.periodic() && p2_.periodic(); }
    double domain_min() const override { return std::max(p1_.domain_min(), p2_.domain_min()); }
    double domain_max() const override { return std::min(p1_.domain_max(), p2_.domain_max()); }

  private:
    SupportFunction p1_, p2_;
};

class AnalyticHeightImpl final : public HeightImpl {
  public:
    AnalyticHeightImpl(std::function<double(double)> v, std::function<double(double)> d, double lo, double hi)
        : v_(std::move(v)), d_(std::move(d)), lo_(lo), hi_(hi) {}
    double value(double theta) const override { return v_(clamp_domain(theta)); }
    double d1(double theta) const override { return d_(clamp_domain(theta)); }
    double domain_min() const override { return lo_; }
    double domain_max() const override { return hi_; }

  private:
    std::function<double(double)> v_, d_;
    double lo_, hi_;
};

class NodeHeightImpl final : public HeightImpl {
  public:
    NodeHeightImpl(std::vector<double> grid, std::vector<double> values, std::function<double(double)> deriv)
        : grid_(std::move(grid)), values_(std::move(values)), deriv_(std::move(deriv)) {}

    double value(double theta) const override {
        const double th = clamp_domain(theta);
        const std::size_t i = locate_interval(grid_, th);
        return hermite_value(th, grid_[i], grid_[i + 1], values_[i], values_[i + 1], deriv_(grid_[i]), deriv_(grid_[i + 1]));
    }
    double d1(double theta) const override { return deriv_(clamp_domain(theta)); }
    double domain_min() const override { return grid_.front(); }
    double domain_max() const override { return grid_.back(); }

  private:
    std::vector<double> grid_, values_;
    std::function<double(double)> deriv_;
};

class SampledHeightImpl final : public HeightImpl {
  public:
    SampledHeightImpl(std::vector<double> grid, std::vector<double> values)
        : grid_(std::move(grid)), values_(std::move(values)) {
        slopes_ = fd_derivative(grid_, values_, 1, false);
    }
    double value(double theta) const override {
        const double th = clamp_domain(theta);
        const std::size_t i = locate_interval(grid_, th);
        return hermite_value(th, grid_[i], grid_[i + 1], values_[i], values_[i + 1], slopes_[i], slopes_[i + 1]);
    }
    double d1(double theta) const override {
        const double th = clamp_domain(theta);
        const std::size_t i = locate_interval(grid_, th);
        return hermite_d1(th, grid_[i], grid_[i + 1], values_[i], values_[i + 1], slopes_[i], slopes_[i + 1]);
    }
    double domain_min() const override { return grid_.front(); }
    double domain_max() const override { return grid_.back(); }

  private:
    std::vector<double> grid_, values_, slopes_;
};

class SumHeightImpl final : public HeightImpl {
  public:
    SumHeightImpl(HeightFunction t1, HeightFunction t2) : t1_(std::move(t1)), t2_(std::move(t2)) {}
    double value(double theta) const override { return t1_.value(theta) + t2_.value(theta); }
    double d1(double theta) const override { return t1_.d1(theta) + t2_.d1(theta); }
    double domain_min() const override { return std::max(t1_.domain_min(), t2_.domain_min()); }
    double domain_max() const override { return std::min(t1_.domain_max(), t2_.domain_max()); }

  private:
    HeightFunction t1_, t2_;
};

double dense_min(const SupportImpl& impl, std::size_t n_points) {
    double lo = std::numeric_limits<double>::infinity();
    const double a = impl.domain_min(), b = impl.domain_max();
    for (std::size_t i = 0; i < n_points; ++i) {
        const double theta = a + (b - a) * static_cast<double>(i) / static_cast<double>(n_points - 1);
        lo = std::min(lo, impl.value(theta));
    }
    return lo;
}

}  // namespace

SupportFunction make_hermite_support(std::vector<double> grid, std::vector<double> values, bool periodic) {
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw Error(ErrorCode::NonMonotonicGrid, "theta grid must be strictly increasing");
    }
    auto impl = std::make_shared<HermiteSampledImpl>(std::move(grid), std::move(values), periodic);
    impl->recorded_min_ = dense_min(*impl, 4096);
    return SupportFunction(std::move(impl));
}

SupportFunction make_log_hermite_support(std::vector<double> grid, std::vector<double> log_values,
                                         std::vector<double> g, std::vector<double> gp) {
    auto impl = std::make_shared<LogHermiteImpl>(std::move(grid), std::move(log_values), std::move(g), std::move(gp));
    impl->recorded_min_ = dense_min(*impl, 4096);
    return SupportFunction(std::move(impl));
}

HeightFunction make_node_height(std::vector<double> grid, std::vector<double> values,
                                std::function<double(double)> derivative) {
    return HeightFunction(std::make_shared<NodeHeightImpl>(std::move(grid), std::move(values), std::move(derivative)));
}

}  // namespace detail

SupportFunction::SupportFunction(std::shared_ptr<const detail::SupportImpl> impl) : impl_(std::move(impl)) {}
double SupportFunction::value(double theta) const { return impl_->value(theta); }
double SupportFunction::d1(double theta) const { return impl_->d1(theta); }
double SupportFunction::d2(double theta) const { return impl_->d2(theta); }
bool SupportFunction::has_d3() const { return impl_->has_d3(); }
double SupportFunction::d3(double theta) const { return impl_->d3(theta); }
SupportKind SupportFunction::kind() const { return impl_->kind(); }
bool SupportFunction::periodic() const { return impl_->periodic(); }
double SupportFunction::domain_min() const { return impl_->domain_min(); }
double SupportFunction::domain_max() const { return impl_->domain_max(); }
double SupportFunction::recorded_min() const { return impl_->recorded_min(); }

HeightFunction::HeightFunction(std::shared_ptr<const detail::HeightImpl> impl) : impl_(std::move(impl)) {}
double HeightFunction::value(double theta) const { return impl_->value(theta); }
double HeightFunction::d1(double theta) const { return impl_->d1(theta); }
double HeightFunction::domain_min() const { return impl_->domain_min(); }
double HeightFunction::domain_max() const { return impl_->domain_max(); }

SupportFunction make_trig_poly(double a0, const std::vector<std::pair<double, double>>& coeffs) {
    auto impl = std::make_shared<detail::TrigPolyImpl>(a0, coeffs);
    impl->recorded_min_ = detail::dense_min(*impl, 4096);
    if (impl->recorded_min_ < 0.0) {
        throw Error(ErrorCode::NegativeSupport, "trig polynomial takes negative values on [0, 2pi]");
    }
    return SupportFunction(std::move(impl));
}

SupportFunction make_exponential(double c, double a) {
    if (c <= 0.0) throw Error(ErrorCode::InvalidParameter, "exponential support needs c > 0");
    if (a == 0.0) throw Error(ErrorCode::InvalidParameter, "exponential support needs a != 0");
    auto impl = std::make_shared<detail::ExponentialImpl>(c, a);
    impl->recorded_min_ = std::min(c, c * std::exp(a * kTwoPi));
    return SupportFunction(std::move(impl));
}

SupportFunction make_sampled(std::span<const double> theta, std::span<const double> p, bool periodic) {
    if (theta.size() != p.size()) throw Error(ErrorCode::InvalidParameter, "theta/p size mismatch");
    if (theta.size() < 8) throw Error(ErrorCode::TooFewSamples, "need at least 8 samples");
    for (std::size_t i = 1; i < theta.size(); ++i) {
        if (!(theta[i] > theta[i - 1])) throw Error(ErrorCode::NonMonotonicGrid, "theta samples must be strictly increasing");
    }
    if (std::abs(theta.front()) > 1e-9 || std::abs(theta.back() - kTwoPi) > 1e-9) {
        throw Error(ErrorCode::DomainError, "samples must cover [0, 2pi]");
    }
    for (double v : p) {
        if (v < 0.0) throw Error(ErrorCode::NegativeSupport, "sampled support has a negative value");
    }
    if (periodic && std::abs(p.front() - p.back()) > tols().period * (1.0 + std::abs(p.front()))) {
        throw Error(ErrorCode::NotPeriodic, "periodic samples disagree at the seam");
    }
    return detail::make_hermite_support(std::vector<double>(theta.begin(), theta.end()),
                                        std::vector<double>(p.begin(), p.end()), periodic);
}

SupportFunction add_supports(const SupportFunction& p1, const SupportFunction& p2) {
    auto impl = std::make_shared<detail::SumSupportImpl>(p1, p2);
    impl->recorded_min_ = detail::dense_min(*impl, 4096);
    return SupportFunction(std::move(impl));
}

HeightFunction make_analytic_height(std::function<double(double)> value, std::function<double(double)> d1,
                                    double domain_min, double domain_max) {
    return HeightFunction(std::make_shared<detail::AnalyticHeightImpl>(std::move(value), std::move(d1),
                                                                       domain_min, domain_max));
}

HeightFunction make_sampled_height(std::span<const double> theta, std::span<const double> t) {
    if (theta.size() != t.size() || theta.size() < 8) {
        throw Error(ErrorCode::TooFewSamples, "need at least 8 height samples");
    }
    for (std::size_t i = 1; i < theta.size(); ++i) {
        if (!(theta[i] > theta[i - 1])) throw Error(ErrorCode::NonMonotonicGrid, "theta samples must be strictly increasing");
    }
    return HeightFunction(std::make_shared<detail::SampledHeightImpl>(
        std::vector<double>(theta.begin(), theta.end()), std::vector<double>(t.begin(), t.end())));
}

HeightFunction add_heights(const HeightFunction& t1, const HeightFunction& t2) {
    return HeightFunction(std::make_shared<detail::SumHeightImpl>(t1, t2));
}

}  // namespace henv
