// henv: horizontal envelopes of horizontal line families in the Heisenberg
// group. Subcommands: generate, verify, sum, classify, recover, oracle.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "henv/config.hpp"
#include "henv/construction.hpp"
#include "henv/envelope.hpp"
#include "henv/errors.hpp"
#include "henv/io.hpp"
#include "henv/numerics.hpp"
#include "henv/recovery.hpp"

namespace {

using namespace henv;

std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            out.push_back(std::stod(field));
        } catch (...) {
            throw Error(ErrorCode::InvalidParameter, "bad number '" + field + "' in " + what);
        }
    }
    return out;
}

bool auto_periodic(const std::vector<double>& p) {
    return std::abs(p.front() - p.back()) <= tols().period * (1.0 + std::abs(p.front()));
}

/// Accepts "constant:c", "trig:a0[,a1,b1,...]", "exp:c,a", or a support CSV path.
SupportFunction load_support(const std::string& source) {
    const auto colon = source.find(':');
    if (colon != std::string::npos) {
        const std::string kind = source.substr(0, colon);
        const std::string args = source.substr(colon + 1);
        if (kind == "constant") {
            const auto v = parse_numbers(args, "constant preset");
            if (v.size() != 1) throw Error(ErrorCode::InvalidParameter, "constant preset needs one value");
            return make_trig_poly(v[0], {});
        }
        if (kind == "trig") {
            const auto v = parse_numbers(args, "trig preset");
            if (v.empty() || v.size() % 2 == 0) {
                throw Error(ErrorCode::InvalidParameter, "trig preset needs a0[,a1,b1[,a2,b2,...]]");
            }
            std::vector<std::pair<double, double>> coeffs;
            for (std::size_t i = 1; i + 1 < v.size(); i += 2) coeffs.emplace_back(v[i], v[i + 1]);
            return make_trig_poly(v[0], coeffs);
        }
        if (kind == "exp") {
            const auto v = parse_numbers(args, "exp preset");
            if (v.size() != 2) throw Error(ErrorCode::InvalidParameter, "exp preset needs c,a");
            return make_exponential(v[0], v[1]);
        }
        throw Error(ErrorCode::InvalidParameter, "unknown preset kind '" + kind + "'");
    }
    const auto samples = read_support_csv(source);
    return make_sampled(samples.theta, samples.p, auto_periodic(samples.p));
}

FamilySpec load_family(const std::string& path, bool checked) {
    auto samples = read_family_csv(path);
    SupportFunction support = make_sampled(samples.theta, samples.p, auto_periodic(samples.p));
    HeightFunction height = make_sampled_height(samples.theta, samples.t);
    return checked ? FamilySpec::checked(std::move(support), std::move(height), std::move(samples.theta))
                   : FamilySpec::unchecked(std::move(support), std::move(height), std::move(samples.theta));
}

Curve load_curve(const std::string& path) {
    // derivative columns are for downstream consumers; verification and
    // recovery re-estimate from the coordinates so a file cannot self-certify
    return with_estimated_derivatives(read_curve_csv(path), true);
}

int cmd_generate(const std::string& preset, const std::string& input, std::size_t n, double t0,
                 const std::string& out, bool svg) {
    std::optional<FamilySpec> fam;
    if (!preset.empty()) {
        fam = make_family(load_support(preset), t0, n);
    } else {
        // a 3-column family file carries its own height; 2 columns integrate from t0
        try {
            fam = load_family(input, true);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ParseError) throw;
            fam.reset();
        }
        if (!fam) {
            const auto samples = read_support_csv(input);
            SupportFunction support = make_sampled(samples.theta, samples.p, auto_periodic(samples.p));
            HeightFunction height = integrate_t(support, t0, samples.theta);
            fam = FamilySpec::unchecked(std::move(support), std::move(height), samples.theta);
        }
    }

    const Curve curve = generate_envelope(*fam);
    const InvariantReport rep = compute_invariants(*fam, curve);
    write_curve_csv(out + ".curve.csv", curve);
    write_family_csv(out + ".family.csv", *fam);
    {
        std::ofstream json(out + ".report.json");
        json << invariant_report_json(rep) << "\n";
    }
    if (svg) write_svg(out + ".svg", curve, &*fam, std::max<std::size_t>(1, fam->grid.size() / 32));
    std::cout << invariant_report_json(rep) << "\n";
    return 0;
}

int cmd_verify(const std::string& curve_path, const std::string& family_path) {
    const Curve curve = load_curve(curve_path);
    const auto residuals = horizontality_residual(curve);
    double res_sup = 0.0;
    for (double r : residuals) res_sup = std::max(res_sup, std::abs(r));
    const bool horizontal = res_sup <= tols().horizontal;

    double tau_sup = 0.0;
    bool tau_defined = false;
    double k_min = 0.0, k_max = 0.0;
    bool k_defined = false;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto& s = curve[i];
        const double speed2 = s.d1->x * s.d1->x + s.d1->y * s.d1->y;
        if (speed2 < tols().eps_reg) continue;
        const double tau = residuals[i] / std::sqrt(speed2);
        tau_sup = std::max(tau_sup, std::abs(tau));
        tau_defined = true;
        if (s.d2) {
            const double k = (s.d1->x * s.d2->y - s.d2->x * s.d1->y) / (speed2 * std::sqrt(speed2));
            k_min = k_defined ? std::min(k_min, k) : k;
            k_max = k_defined ? std::max(k_max, k) : k;
            k_defined = true;
        }
    }

    std::ostringstream json;
    json << "{\"horizontal\":" << (horizontal ? "true" : "false")
         << ",\"horiz_residual_sup\":" << format_double(res_sup)
         << ",\"tau_sup\":" << (tau_defined ? format_double(tau_sup) : "null")
         << ",\"k_min\":" << (k_defined ? format_double(k_min) : "null")
         << ",\"k_max\":" << (k_defined ? format_double(k_max) : "null");
    if (!family_path.empty()) {
        const FamilySpec fam = load_family(family_path, false);
        const auto tang = tangency_check(fam, curve);
        double tang_sup = 0.0;
        for (double v : tang) tang_sup = std::max(tang_sup, v);
        json << ",\"tangency_sup\":" << format_double(tang_sup);
    }
    json << "}";
    std::cout << json.str() << "\n";
    return horizontal ? 0 : 1;
}

int cmd_sum(const std::string& f1_path, const std::string& f2_path, const std::string& out) {
    const FamilySpec f1 = load_family(f1_path, false);
    const FamilySpec f2 = load_family(f2_path, false);
    const PairReport rep = check_pair_condition(f1.support, f2.support, f1.grid);
    const FamilySpec sum = sum_family(f1, f2);
    if (!out.empty()) write_family_csv(out + ".family.csv", sum);
    std::cout << pair_report_json(rep) << "\n";
    return rep.admissible ? 0 : 1;
}

int cmd_classify(const std::string& p1_src, const std::string& p2_src, double a, double b,
                 std::size_t dense) {
    const SupportFunction p1 = load_support(p1_src);
    const SupportFunction p2 = load_support(p2_src);
    const PairReport rep = classify_pair(p1, p2, a, b, dense);
    std::cout << pair_report_json(rep) << "\n";
    const bool ok = rep.admissible && (!rep.conclusion_holds.has_value() || *rep.conclusion_holds);
    return ok ? 0 : 1;
}

int cmd_recover(const std::string& curve_path, const std::string& out) {
    const Curve curve = load_curve(curve_path);
    const FamilySpec fam = recover_family(curve);
    const double residual = fd_compatibility_residual(fam);
    write_family_csv(out + ".family.csv", fam);
    std::cout << "{\"compatibility_residual\":" << format_double(residual)
              << ",\"nodes\":" << fam.grid.size() << "}\n";
    return 0;
}

int cmd_oracle(const std::string& family_path, const std::string& out) {
    const FamilySpec fam = load_family(family_path, false);
    const Curve oracle = oracle_envelope(fam);
    write_curve_csv(out + ".curve.csv", oracle);
    double dist_sup = 0.0;
    for (const auto& s : oracle.samples()) {
        const Point3 ref = envelope_point(fam.support, fam.height, s.theta);
        const double dx = s.point.x - ref.x, dy = s.point.y - ref.y, dz = s.point.z - ref.z;
        dist_sup = std::max(dist_sup, std::sqrt(dx * dx + dy * dy + dz * dz));
    }
    std::cout << "{\"nodes\":" << oracle.size()
              << ",\"max_distance_to_closed_form\":" << format_double(dist_sup) << "}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Horizontal envelopes of horizontal line families in the Heisenberg group"};
    app.require_subcommand(1);

    std::string preset, input, out, curve_path, family_path, f1_path, f2_path, p1_src, p2_src;
    std::size_t n = 1024, dense = 1024;
    double t0 = 0.0, a = 0.0, b = kTwoPi;
    bool svg = false;

    auto* generate = app.add_subcommand("generate", "Generate an envelope from a preset or support CSV");
    auto* opt_preset = generate->add_option("--preset", preset, "constant:c | trig:a0,a1,b1,... | exp:c,a");
    auto* opt_input = generate->add_option("--input", input, "support CSV (theta,p) or family CSV (theta,p,t)");
    opt_preset->excludes(opt_input);
    generate->add_option("--n", n, "number of grid subintervals")->default_val(1024);
    generate->add_option("--t0", t0, "height at theta = 0")->default_val(0.0);
    generate->add_option("--out", out, "output prefix")->required();
    generate->add_flag("--svg", svg, "write an xy-projection SVG");

    auto* verify = app.add_subcommand("verify", "Check horizontality and invariants of a curve CSV");
    verify->add_option("--curve", curve_path, "curve CSV")->required();
    verify->add_option("--family", family_path, "family CSV for the tangency check");

    auto* sum = app.add_subcommand("sum", "Combine two families and test admissibility");
    sum->add_option("--family1", f1_path, "first family CSV")->required();
    sum->add_option("--family2", f2_path, "second family CSV")->required();
    sum->add_option("--out", out, "output prefix for the summed family");

    auto* classify = app.add_subcommand("classify", "Sign classification of an admissible pair");
    classify->add_option("--p1", p1_src, "support preset or CSV")->required();
    classify->add_option("--p2", p2_src, "support preset or CSV")->required();
    classify->add_option("--a", a, "interval start")->required();
    classify->add_option("--b", b, "interval end")->required();
    classify->add_option("--dense", dense, "dense sample subintervals")->default_val(1024);

    auto* recover = app.add_subcommand("recover", "Recover the tangent-line family of a horizontal curve");
    recover->add_option("--curve", curve_path, "curve CSV")->required();
    recover->add_option("--out", out, "output prefix")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force envelope from pairwise line intersections");
    oracle->add_option("--family", family_path, "family CSV")->required();
    oracle->add_option("--out", out, "output prefix")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            if (preset.empty() && input.empty()) {
                std::cerr << "InvalidParameter: generate needs --preset or --input\n";
                return 2;
            }
            return cmd_generate(preset, input, n, t0, out, svg);
        }
        if (verify->parsed()) return cmd_verify(curve_path, family_path);
        if (sum->parsed()) return cmd_sum(f1_path, f2_path, out);
        if (classify->parsed()) return cmd_classify(p1_src, p2_src, a, b, dense);
        if (recover->parsed()) return cmd_recover(curve_path, out);
        if (oracle->parsed()) return cmd_oracle(family_path, out);
    } catch (const henv::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
