#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "henv/config.hpp"
#include "henv/errors.hpp"
#include "henv/numerics.hpp"
#include "henv/support.hpp"

using namespace henv;

namespace {

std::vector<double> sample_grid(std::size_t n) { return uniform_grid(n); }

}  // namespace

TEST_CASE("trig polynomial presets") {
    SUBCASE("constant") {
        const auto p = make_trig_poly(3.0, {});
        CHECK(p.value(0.7) == 3.0);
        CHECK(p.d1(0.7) == 0.0);
        CHECK(p.d2(0.7) == 0.0);
        CHECK(p.kind() == SupportKind::analytic);
        CHECK(p.periodic());
    }
    SUBCASE("2 + cos") {
        const auto p = make_trig_poly(2.0, {{1.0, 0.0}});
        CHECK(p.value(0.0) == doctest::Approx(3.0));
        CHECK(p.d1(0.0) == doctest::Approx(0.0));
        CHECK(p.d2(0.0) == doctest::Approx(-1.0));
        CHECK(p.d3(0.0) == doctest::Approx(0.0));
    }
    SUBCASE("negative support rejected") {
        CHECK_THROWS_AS(make_trig_poly(1.0, {{-2.0, 0.0}}), Error);
        try {
            make_trig_poly(1.0, {{-2.0, 0.0}});
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NegativeSupport);
        }
    }
    SUBCASE("p == 0 is allowed") {
        const auto p = make_trig_poly(0.0, {});
        CHECK(p.value(1.0) == 0.0);
        CHECK(p.recorded_min() == 0.0);
    }
}

TEST_CASE("exponential preset") {
    const auto p = make_exponential(1.0, 1.0);
    CHECK(p.value(0.0) == doctest::Approx(1.0));
    CHECK(p.d1(0.0) == doctest::Approx(1.0));
    CHECK(p.d2(0.0) == doctest::Approx(1.0));
    CHECK_FALSE(p.periodic());

    SUBCASE("pair (p, p) satisfies p1 p2 = p1' p2' on a grid") {
        for (double theta : sample_grid(64)) {
            CHECK(p.value(theta) * p.value(theta) ==
                  doctest::Approx(p.d1(theta) * p.d1(theta)).epsilon(1e-14));
        }
    }
    SUBCASE("c=2, a=-1 at ln 2") {
        const auto q = make_exponential(2.0, -1.0);
        CHECK(q.value(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(make_exponential(0.0, 1.0), Error);
        CHECK_THROWS_AS(make_exponential(-1.0, 1.0), Error);
        CHECK_THROWS_AS(make_exponential(1.0, 0.0), Error);
    }
}

TEST_CASE("analytic derivatives agree with central differences at O(h^2)") {
    const auto presets = std::vector<SupportFunction>{
        make_trig_poly(2.0, {{1.0, 0.0}}),
        make_trig_poly(1.0, {{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.25}}),
        make_exponential(1.0, 0.5),
    };
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> pick(0.5, kTwoPi - 0.5);
    for (const auto& p : presets) {
        double coarse1 = 0.0, coarse2 = 0.0;
        for (double h : {1e-2, 5e-3}) {
            double sup1 = 0.0, sup2 = 0.0;
            for (int i = 0; i < 1000; ++i) {
                const double theta = pick(rng);
                const double fd1 = (p.value(theta + h) - p.value(theta - h)) / (2 * h);
                const double fd2 = (p.value(theta + h) - 2 * p.value(theta) + p.value(theta - h)) / (h * h);
                sup1 = std::max(sup1, std::abs(fd1 - p.d1(theta)));
                sup2 = std::max(sup2, std::abs(fd2 - p.d2(theta)));
            }
            // |analytic - FD| <= C h^2 with C ~ max|f''''|/12 (here < 3)
            CHECK(sup1 < 3.0 * h * h);
            CHECK(sup2 < 3.0 * h * h);
            if (coarse1 == 0.0) {
                coarse1 = sup1;
                coarse2 = sup2;
            } else {
                CHECK(coarse1 / sup1 > 3.0);  // O(h^2): halving h quarters the gap
                CHECK(coarse2 / sup2 > 3.0);
            }
        }
    }
}

TEST_CASE("sampled support") {
    SUBCASE("constant reproduction") {
        const auto grid = sample_grid(255);
        std::vector<double> p(grid.size(), 3.0);
        const auto s = make_sampled(grid, p, true);
        CHECK(s.value(1.234) == doctest::Approx(3.0).epsilon(1e-13));
        CHECK(std::abs(s.d2(1.234)) < 1e-8);
        CHECK(s.kind() == SupportKind::sampled);
    }
    SUBCASE("2 + cos second derivative at the seam") {
        const auto grid = sample_grid(255);
        std::vector<double> p(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) p[i] = 2.0 + std::cos(grid[i]);
        const auto s = make_sampled(grid, p, true);
        CHECK(s.d2(0.0) == doctest::Approx(-1.0).epsilon(1e-4));
        CHECK(std::abs(s.value(0.0) - s.value(kTwoPi)) < 1e-10);
        CHECK(std::abs(s.d1(0.0) - s.d1(kTwoPi)) < tols().period);
    }
    SUBCASE("validation") {
        std::vector<double> dup{0.0, 0.0, 1.0, 2.0, 3.0, 4.0, 5.0, kTwoPi};
        std::vector<double> vals(8, 1.0);
        CHECK_THROWS_AS(make_sampled(dup, vals, false), Error);

        std::vector<double> few{0.0, kTwoPi};
        std::vector<double> fewv{1.0, 1.0};
        try {
            make_sampled(few, fewv, false);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::TooFewSamples);
        }

        auto grid = sample_grid(16);
        std::vector<double> neg(grid.size(), 1.0);
        neg[3] = -0.5;
        try {
            make_sampled(grid, neg, false);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NegativeSupport);
        }

        std::vector<double> partial(grid.begin(), grid.end() - 1);
        std::vector<double> pv(partial.size(), 1.0);
        CHECK_THROWS_AS(make_sampled(partial, pv, false), Error);
    }
}

TEST_CASE("sampled interpolant converges to the analytic preset") {
    const auto exact = make_trig_poly(2.0, {{1.0, 0.0}});
    auto sup_err = [&](std::size_t n, int order) {
        const auto grid = sample_grid(n);
        std::vector<double> p(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) p[i] = exact.value(grid[i]);
        const auto s = make_sampled(grid, p, true);
        double sup = 0.0;
        for (std::size_t i = 0; i < 777; ++i) {
            const double theta = kTwoPi * static_cast<double>(i) / 777.0;
            const double got = order == 0 ? s.value(theta) : s.d2(theta);
            const double want = order == 0 ? exact.value(theta) : exact.d2(theta);
            sup = std::max(sup, std::abs(got - want));
        }
        return sup;
    };
    const double v64 = sup_err(64, 0), v128 = sup_err(128, 0);
    CHECK(std::log2(v64 / v128) > 2.0);  // empirical order >= 2 for p
    const double d64 = sup_err(64, 2), d128 = sup_err(128, 2);
    CHECK(std::log2(d64 / d128) > 1.0);  // empirical order >= 1 for p''
}

TEST_CASE("domain policy") {
    const auto trig = make_trig_poly(2.0, {{1.0, 0.0}});
    CHECK(trig.value(kTwoPi + 0.5) == doctest::Approx(trig.value(0.5)).epsilon(1e-12));
    CHECK(trig.value(-0.5) == doctest::Approx(trig.value(kTwoPi - 0.5)).epsilon(1e-12));

    const auto exp = make_exponential(1.0, 1.0);
    CHECK_THROWS_AS(exp.value(kTwoPi + 0.5), Error);
    CHECK_THROWS_AS(exp.value(-0.5), Error);
    CHECK_NOTHROW(exp.value(kTwoPi));
}

TEST_CASE("height functions") {
    const auto t = make_analytic_height([](double th) { return -4.0 * th; }, [](double) { return -4.0; });
    CHECK(t.value(1.5) == doctest::Approx(-6.0));
    CHECK(t.d1(0.3) == doctest::Approx(-4.0));

    const auto grid = sample_grid(64);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = std::sin(grid[i]);
    const auto ts = make_sampled_height(grid, vals);
    CHECK(ts.value(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-6));
    CHECK(ts.d1(1.0) == doctest::Approx(std::cos(1.0)).epsilon(1e-5));

    const auto sum = add_heights(t, ts);
    CHECK(sum.value(1.0) == doctest::Approx(-4.0 + std::sin(1.0)).epsilon(1e-6));
}

TEST_CASE("support sum") {
    const auto a = make_trig_poly(2.0, {{1.0, 0.0}});
    const auto b = make_trig_poly(1.0, {});
    const auto s = add_supports(a, b);
    CHECK(s.value(0.4) == doctest::Approx(a.value(0.4) + 1.0));
    CHECK(s.kind() == SupportKind::analytic);
    CHECK(s.periodic());
    CHECK(s.has_d3());
}
