#pragma once

#include <optional>
#include <vector>

namespace henv {

/// Point of the Heisenberg group H1 = (R^3, *) in exponential coordinates.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Group law (x,y,z)*(x',y',z') = (x+x', y+y', z+z'+yx'-xy').
Point3 group_op(const Point3& a, const Point3& b);

/// Two-sided inverse (-x,-y,-z).
Point3 group_inverse(const Point3& p);

struct CurveSample {
    double theta = 0.0;
    Point3 point;
    std::optional<Point3> d1;  // (x',y',z') estimate
    std::optional<Point3> d2;  // (x'',y'',z'') estimate
};

/// Discretized curve over a strictly increasing theta grid (>= 8 samples).
class Curve {
  public:
    explicit Curve(std::vector<CurveSample> samples);

    const std::vector<CurveSample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    const CurveSample& operator[](std::size_t i) const { return samples_[i]; }

    std::vector<double> thetas() const;
    std::vector<double> xs() const;
    std::vector<double> ys() const;
    std::vector<double> zs() const;

  private:
    std::vector<CurveSample> samples_;
};

/// Copy of the curve with d1 (and optionally d2) replaced by finite-difference
/// estimates from the sample points.
Curve with_estimated_derivatives(const Curve& c, bool second = true);

/// Copy keeping the existing d1 and filling d2 by differentiating the d1
/// samples. Requires d1 on every sample.
Curve with_estimated_second_derivatives(const Curve& c);

/// Left translation L_p(q) = p*q applied to every sample; derivative
/// estimates are recomputed from the translated points.
Curve left_translate(const Point3& p, const Curve& c);

/// Per-sample residual z' - x'y + xy'; zero iff the curve is horizontal.
std::vector<double> horizontality_residual(const Curve& c);

/// Per-sample p-curvature (x'y'' - x''y') / ((x')^2+(y')^2)^{3/2}.
std::vector<double> p_curvature(const Curve& c);

/// Per-sample contact normality: the horizontality residual per unit
/// horizontal speed, so tau == 0 statements are parametrization independent.
std::vector<double> contact_normality(const Curve& c);

/// True when sup |horizontality residual| <= tol (default tols().horizontal).
bool is_horizontal(const Curve& c, double tol = -1.0);

}  // namespace henv
