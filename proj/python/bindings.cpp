#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "henv/construction.hpp"
#include "henv/envelope.hpp"
#include "henv/errors.hpp"
#include "henv/heisenberg.hpp"
#include "henv/io.hpp"
#include "henv/line_family.hpp"
#include "henv/numerics.hpp"
#include "henv/recovery.hpp"
#include "henv/support.hpp"

namespace py = pybind11;
using namespace henv;

namespace {

py::object optional_point(const std::optional<Point3>& p) {
    if (!p) return py::none();
    return py::make_tuple(p->x, p->y, p->z);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Horizontal envelopes of horizontal line families in the Heisenberg group";

    static py::exception<Error> exc(m, "EnvelopeError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    py::class_<Point3>(m, "Point3")
        .def(py::init<double, double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0)
        .def_readwrite("x", &Point3::x)
        .def_readwrite("y", &Point3::y)
        .def_readwrite("z", &Point3::z)
        .def("__repr__", [](const Point3& p) {
            return "Point3(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " + std::to_string(p.z) + ")";
        });

    py::class_<SupportFunction>(m, "SupportFunction")
        .def("__call__", &SupportFunction::value, py::arg("theta"))
        .def("value", &SupportFunction::value, py::arg("theta"))
        .def("d1", &SupportFunction::d1, py::arg("theta"))
        .def("d2", &SupportFunction::d2, py::arg("theta"))
        .def_property_readonly("periodic", &SupportFunction::periodic)
        .def_property_readonly("kind", [](const SupportFunction& p) {
            return p.kind() == SupportKind::analytic ? "analytic" : "sampled";
        })
        .def_property_readonly("recorded_min", &SupportFunction::recorded_min)
        .def("__add__", &add_supports);

    py::class_<HeightFunction>(m, "HeightFunction")
        .def("__call__", &HeightFunction::value, py::arg("theta"))
        .def("value", &HeightFunction::value, py::arg("theta"))
        .def("d1", &HeightFunction::d1, py::arg("theta"))
        .def("__add__", &add_heights);

    py::class_<CurveSample>(m, "CurveSample")
        .def_readonly("theta", &CurveSample::theta)
        .def_property_readonly("point", [](const CurveSample& s) {
            return py::make_tuple(s.point.x, s.point.y, s.point.z);
        })
        .def_property_readonly("d1", [](const CurveSample& s) { return optional_point(s.d1); })
        .def_property_readonly("d2", [](const CurveSample& s) { return optional_point(s.d2); });

    py::class_<Curve>(m, "Curve")
        .def("__len__", &Curve::size)
        .def("__getitem__",
             [](const Curve& c, std::size_t i) {
                 if (i >= c.size()) throw py::index_error();
                 return c[i];
             })
        .def("thetas", &Curve::thetas)
        .def("xs", &Curve::xs)
        .def("ys", &Curve::ys)
        .def("zs", &Curve::zs);

    py::class_<HorizontalLine>(m, "HorizontalLine")
        .def(py::init<double, double, double>(), py::arg("p"), py::arg("theta"), py::arg("t"))
        .def_readwrite("p", &HorizontalLine::p)
        .def_readwrite("theta", &HorizontalLine::theta)
        .def_readwrite("t", &HorizontalLine::t);

    py::class_<FamilySpec>(m, "FamilySpec")
        .def_readonly("support", &FamilySpec::support)
        .def_readonly("height", &FamilySpec::height)
        .def_readonly("grid", &FamilySpec::grid)
        .def_static("checked", &FamilySpec::checked, py::arg("support"), py::arg("height"), py::arg("grid"))
        .def_static("unchecked", &FamilySpec::unchecked, py::arg("support"), py::arg("height"), py::arg("grid"));

    py::class_<InvariantReport>(m, "InvariantReport")
        .def_readonly("k", &InvariantReport::k)
        .def_readonly("tau_sup", &InvariantReport::tau_sup)
        .def_readonly("length", &InvariantReport::length)
        .def_readonly("area_F", &InvariantReport::area_F)
        .def_readonly("z_drop", &InvariantReport::z_drop)
        .def_readonly("horiz_residual_sup", &InvariantReport::horiz_residual_sup);

    py::class_<ClosednessResult>(m, "ClosednessResult")
        .def_readonly("z_drop", &ClosednessResult::z_drop)
        .def_readonly("closed", &ClosednessResult::closed)
        .def_readonly("area_F", &ClosednessResult::area_F)
        .def_readonly("identity_residual", &ClosednessResult::identity_residual);

    py::class_<ObservedSigns>(m, "ObservedSigns")
        .def_readonly("p1_d1", &ObservedSigns::p1_d1)
        .def_readonly("p2_d1", &ObservedSigns::p2_d1)
        .def_readonly("p2_d2", &ObservedSigns::p2_d2)
        .def_readonly("p1_d2", &ObservedSigns::p1_d2);

    py::class_<PairReport>(m, "PairReport")
        .def_readonly("residual_sup", &PairReport::residual_sup)
        .def_readonly("admissible", &PairReport::admissible)
        .def_readonly("case_label", &PairReport::case_label)
        .def_readonly("interval", &PairReport::interval)
        .def_readonly("observed_signs", &PairReport::observed_signs)
        .def_property_readonly("conclusion_holds", [](const PairReport& r) -> py::object {
            if (!r.conclusion_holds) return py::none();
            return py::bool_(*r.conclusion_holds);
        });

    m.def("make_trig_poly", &make_trig_poly, py::arg("a0"),
          py::arg("coeffs") = std::vector<std::pair<double, double>>{});
    m.def("make_exponential", &make_exponential, py::arg("c"), py::arg("a"));
    m.def(
        "make_sampled",
        [](const std::vector<double>& theta, const std::vector<double>& p, bool periodic) {
            return make_sampled(theta, p, periodic);
        },
        py::arg("theta"), py::arg("p"), py::arg("periodic"));
    m.def("add_supports", &add_supports);
    m.def("make_analytic_height", &make_analytic_height, py::arg("value"), py::arg("d1"),
          py::arg("domain_min") = 0.0, py::arg("domain_max") = kTwoPi);
    m.def(
        "make_sampled_height",
        [](const std::vector<double>& theta, const std::vector<double>& t) {
            return make_sampled_height(theta, t);
        },
        py::arg("theta"), py::arg("t"));

    m.def("uniform_grid", &uniform_grid, py::arg("n_intervals"));
    m.def(
        "integrate_t",
        [](const SupportFunction& p, double t0, const std::vector<double>& grid) {
            return integrate_t(p, t0, grid);
        },
        py::arg("p"), py::arg("t0"), py::arg("grid"));
    m.def("make_family", &make_family, py::arg("p"), py::arg("t0") = 0.0, py::arg("n_intervals") = 1024);
    m.def("envelope_point", &envelope_point, py::arg("p"), py::arg("t"), py::arg("theta"));
    m.def("generate_envelope", &generate_envelope, py::arg("family"));
    m.def(
        "curvature_closed_form",
        [](const SupportFunction& p, const std::vector<double>& grid) {
            return curvature_closed_form(p, grid);
        },
        py::arg("p"), py::arg("grid"));
    m.def(
        "horizontal_length",
        [](const SupportFunction& p, const std::vector<double>& grid) { return horizontal_length(p, grid); },
        py::arg("p"), py::arg("grid"));
    m.def(
        "santalo_area",
        [](const SupportFunction& p, const std::vector<double>& grid) { return santalo_area(p, grid); },
        py::arg("p"), py::arg("grid"));
    m.def("closedness_check", &closedness_check, py::arg("p"), py::arg("t"), py::arg("n_intervals") = 4096);
    m.def("compute_invariants", &compute_invariants, py::arg("family"), py::arg("curve"));

    m.def("group_op", &group_op, py::arg("a"), py::arg("b"));
    m.def("group_inverse", &group_inverse, py::arg("p"));
    m.def("left_translate", &left_translate, py::arg("p"), py::arg("curve"));
    m.def("horizontality_residual", &horizontality_residual, py::arg("curve"));
    m.def("p_curvature", &p_curvature, py::arg("curve"));
    m.def("contact_normality", &contact_normality, py::arg("curve"));
    m.def("is_horizontal", &is_horizontal, py::arg("curve"), py::arg("tol") = -1.0);

    m.def("line_point", &line_point, py::arg("line"), py::arg("s"));
    m.def("plane_residuals", &plane_residuals, py::arg("line"), py::arg("q"));
    m.def("plane_theta_derivatives", &plane_theta_derivatives, py::arg("family"), py::arg("theta"),
          py::arg("q"));

    m.def("sum_family", &sum_family, py::arg("f1"), py::arg("f2"));
    m.def(
        "check_pair_condition",
        [](const SupportFunction& p1, const SupportFunction& p2, const std::vector<double>& grid) {
            return check_pair_condition(p1, p2, grid);
        },
        py::arg("p1"), py::arg("p2"), py::arg("grid"));
    m.def("classify_pair", &classify_pair, py::arg("p1"), py::arg("p2"), py::arg("a"), py::arg("b"),
          py::arg("dense_intervals") = 1024);
    m.def(
        "exponential_partner",
        [](const SupportFunction& p2, double p1_at_a, double a, double b, const std::vector<double>& grid) {
            return exponential_partner(p2, p1_at_a, a, b, grid);
        },
        py::arg("p2"), py::arg("p1_at_a"), py::arg("a"), py::arg("b"), py::arg("grid"));

    m.def("recover_family", &recover_family, py::arg("curve"));
    m.def("fd_compatibility_residual", &fd_compatibility_residual, py::arg("family"));
    m.def("oracle_envelope", &oracle_envelope, py::arg("family"));
    m.def("tangency_check", &tangency_check, py::arg("family"), py::arg("curve"));

    m.def("invariant_report_json", &invariant_report_json, py::arg("report"));
    m.def("pair_report_json", &pair_report_json, py::arg("report"));

    m.attr("TWO_PI") = kTwoPi;
}
