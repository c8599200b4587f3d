#include <doctest.h>

#include <cmath>
#include <vector>

#include "henv/construction.hpp"
#include "henv/envelope.hpp"
#include "henv/errors.hpp"
#include "henv/numerics.hpp"
#include "henv/recovery.hpp"

using namespace henv;

namespace {

const double kPi = kTwoPi / 2.0;

double max_distance(const Curve& a, const FamilySpec& fam) {
    double sup = 0.0;
    for (const auto& s : a.samples()) {
        const Point3 ref = envelope_point(fam.support, fam.height, s.theta);
        const double dx = s.point.x - ref.x, dy = s.point.y - ref.y, dz = s.point.z - ref.z;
        sup = std::max(sup, std::sqrt(dx * dx + dy * dy + dz * dz));
    }
    return sup;
}

}  // namespace

TEST_CASE("recover_family on the helix") {
    const auto fam = make_family(make_trig_poly(2.0, {}), 0.0, 256);
    const auto curve = generate_envelope(fam);
    const auto rec = recover_family(curve);
    REQUIRE(rec.grid.size() == fam.grid.size());
    for (std::size_t i = 0; i < rec.grid.size(); ++i) {
        CHECK(std::abs(rec.grid[i] - fam.grid[i]) < 1e-12);
        CHECK(std::abs(rec.support.value(rec.grid[i]) - 2.0) < 1e-12);
        CHECK(std::abs(rec.height.value(rec.grid[i]) + 4.0 * rec.grid[i]) < 1e-10);
    }
}

TEST_CASE("round-trip reproduces the generators") {
    const auto presets = std::vector<SupportFunction>{
        make_trig_poly(2.0, {{1.0, 0.0}}),
        make_trig_poly(1.0, {{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.25}}),
    };
    for (const auto& p : presets) {
        const auto fam = make_family(p, 0.0, 1024);
        const auto curve = generate_envelope(fam);
        const auto rec = recover_family(curve);
        double sup_p = 0.0, sup_t = 0.0;
        for (std::size_t i = 0; i < rec.grid.size(); ++i) {
            sup_p = std::max(sup_p, std::abs(rec.support.value(rec.grid[i]) - p.value(fam.grid[i])));
            sup_t = std::max(sup_t, std::abs(rec.height.value(rec.grid[i]) - fam.height.value(fam.grid[i])));
        }
        CHECK(sup_p < 1e-7);
        CHECK(sup_t < 1e-7);
        CHECK(fd_compatibility_residual(rec) < 1e-5);
    }
}

TEST_CASE("recovery rejects bad inputs") {
    SUBCASE("z-axis segment is not horizontally regular") {
        std::vector<CurveSample> samples(64);
        for (std::size_t i = 0; i < 64; ++i) {
            const double th = static_cast<double>(i) * 0.05;
            samples[i] = {th, {0, 0, th}, Point3{0, 0, 1}, std::nullopt};
        }
        try {
            recover_family(Curve(std::move(samples)));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotHorizontallyRegular);
        }
    }
    SUBCASE("non-horizontal curve") {
        std::vector<CurveSample> samples(64);
        for (std::size_t i = 0; i < 64; ++i) {
            const double th = static_cast<double>(i) * 0.05;
            samples[i] = {th, {std::cos(th), std::sin(th), th}, Point3{-std::sin(th), std::cos(th), 1.0},
                          std::nullopt};
        }
        try {
            recover_family(Curve(std::move(samples)));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotHorizontal);
        }
    }
}

TEST_CASE("fd compatibility residual flags violations") {
    const auto p = make_trig_poly(1.0, {});
    const auto t = make_analytic_height([](double) { return 0.0; }, [](double) { return 0.0; });
    const auto fam = FamilySpec::unchecked(p, t, uniform_grid(64));
    CHECK(fd_compatibility_residual(fam) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("oracle envelope") {
    SUBCASE("constant support at n = 4096") {
        const auto fam = make_family(make_trig_poly(2.0, {}), 0.0, 4096);
        const auto oracle = oracle_envelope(fam);
        CHECK(oracle.size() == fam.grid.size() - 1);
        CHECK(max_distance(oracle, fam) < 1e-5);
    }
    SUBCASE("refinement improves the oracle at first order or better") {
        const auto p = make_trig_poly(2.0, {{1.0, 0.0}});
        double prev = 0.0;
        for (std::size_t n : {512, 1024, 2048}) {
            const auto fam = make_family(p, 0.0, n);
            const double err = max_distance(oracle_envelope(fam), fam);
            if (prev > 0.0) CHECK(prev / err >= 1.9);
            prev = err;
        }
    }
    SUBCASE("a pi-wide gap in the grid is rejected as parallel") {
        std::vector<double> grid(64);
        for (std::size_t i = 0; i < 63; ++i) grid[i] = static_cast<double>(i) / 62.0;
        grid[63] = 1.0 + kPi;
        const auto p = make_exponential(1.0, 1.0);
        const auto t = integrate_t(p, 0.0, uniform_grid(64));
        const auto fam = FamilySpec::unchecked(p, t, grid);
        try {
            oracle_envelope(fam);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParallelLines);
        }
    }
    SUBCASE("needs at least 64 nodes") {
        const auto fam = make_family(make_trig_poly(2.0, {}), 0.0, 32);
        CHECK_THROWS_AS(oracle_envelope(fam), Error);
    }
}

TEST_CASE("tangency check") {
    SUBCASE("generated envelope touches its own family") {
        const auto fam = make_family(make_trig_poly(2.0, {{1.0, 0.0}}), 0.0, 512);
        const auto curve = generate_envelope(fam);
        const auto res = tangency_check(fam, curve);
        double sup = 0.0;
        for (double v : res) sup = std::max(sup, v);
        CHECK(sup < 1e-8);
    }
    SUBCASE("helix against its own tangent family") {
        const auto fam = make_family(make_trig_poly(2.0, {}), 0.0, 512);
        const auto curve = generate_envelope(fam);
        const auto res = tangency_check(fam, curve);
        double sup = 0.0;
        for (double v : res) sup = std::max(sup, v);
        CHECK(sup < 1e-10);
    }
    SUBCASE("wrong family is detected") {
        const auto fam = make_family(make_trig_poly(2.0, {{1.0, 0.0}}), 0.0, 512);
        const auto curve = generate_envelope(fam);
        const auto wrong = make_family(make_trig_poly(3.0, {}), 0.0, 512);
        const auto res = tangency_check(wrong, curve);
        double sup = 0.0;
        for (double v : res) sup = std::max(sup, v);
        CHECK(sup >= 0.5);
    }
}

TEST_CASE("uniqueness of the contact point") {
    // the 2x2 system (F1, dF1) = 0 over (x, y) has determinant 1; its
    // solution must equal the closed-form projection
    const auto p = make_trig_poly(2.0, {{1.0, 0.0}});
    const auto fam = make_family(p, 0.0, 256);
    const auto curve = generate_envelope(fam);
    for (std::size_t i = 0; i < fam.grid.size(); ++i) {
        const double th = fam.grid[i];
        const double c = std::cos(th), s = std::sin(th);
        const double x = p.value(th) * c - p.d1(th) * s;
        const double y = p.value(th) * s + p.d1(th) * c;
        CHECK(std::abs(x - curve[i].point.x) < 1e-10);
        CHECK(std::abs(y - curve[i].point.y) < 1e-10);
    }
}

TEST_CASE("periodic envelopes close in projection and drop by minus twice the area") {
    // periodic support with positive area: projection closes, z jumps by -2F
    for (const auto& p : {make_trig_poly(2.0, {}), make_trig_poly(2.0, {{1.0, 0.0}})}) {
        const auto fam = make_family(p, 0.0, 1024);
        const auto curve = generate_envelope(fam);
        const auto first = curve[0].point, last = curve[curve.size() - 1].point;
        CHECK(std::abs(first.x - last.x) < 1e-10);
        CHECK(std::abs(first.y - last.y) < 1e-10);
        const double F = santalo_area(p, fam.grid);
        CHECK(F > 0.0);
        CHECK(std::abs((last.z - first.z) + 2.0 * F) < 1e-8);
        CHECK(std::abs(last.z - first.z) > 1.0);
    }
}
