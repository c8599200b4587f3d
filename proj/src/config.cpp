#include "henv/config.hpp"

#include <cstdlib>
#include <string>

namespace henv {

double tolerance_scale() {
    static const double scale = [] {
        const char* raw = std::getenv("ENVELOPE_TOL_OVERRIDE");
        if (raw == nullptr) return 1.0;
        try {
            double v = std::stod(raw);
            if (v > 0.0) return v;
        } catch (...) {
        }
        return 1.0;
    }();
    return scale;
}

const Tolerances& tols() {
    static const Tolerances scaled = [] {
        Tolerances t;
        const double s = tolerance_scale();
        t.horizontal *= s;
        t.compat_analytic *= s;
        t.compat_sampled *= s;
        t.closed_base *= s;
        t.pair_base *= s;
        t.period *= s;
        t.eps_reg *= s;
        t.radius_floor *= s;
        return t;
    }();
    return scaled;
}

}  // namespace henv
