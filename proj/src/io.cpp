#include "henv/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "henv/errors.hpp"

namespace henv {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

double parse_number(const std::string& text, const std::string& path, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (...) {
        throw Error(ErrorCode::ParseError,
                    path + ":" + std::to_string(line_no) + ": invalid number '" + text + "'");
    }
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path, std::size_t min_cols, std::size_t max_cols) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (line_no == 1) {
            table.header = fields;
            if (fields.size() < min_cols || fields.size() > max_cols) {
                throw Error(ErrorCode::ParseError,
                            path + ":1: expected between " + std::to_string(min_cols) + " and " +
                                std::to_string(max_cols) + " columns");
            }
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw Error(ErrorCode::ParseError,
                        path + ":" + std::to_string(line_no) + ": expected " +
                            std::to_string(table.header.size()) + " fields, got " + std::to_string(fields.size()));
        }
        std::vector<double> row(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) row[i] = parse_number(fields[i], path, line_no);
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) throw Error(ErrorCode::ParseError, path + ": empty file");
    return table;
}

void expect_header(const CsvTable& table, const std::vector<std::string>& expected, const std::string& path) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i >= table.header.size() || table.header[i] != expected[i]) {
            throw Error(ErrorCode::ParseError, path + ":1: expected header column '" + expected[i] + "'");
        }
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, path + ": cannot open for writing");
    return out;
}

/// Minimal deterministic JSON emitter: fixed field order, %.17g numbers,
/// NaN/inf as null.
class JsonWriter {
  public:
    JsonWriter& begin_object() { return token("{"); }
    JsonWriter& end_object() {
        first_ = false;
        out_ += "}";
        return *this;
    }
    JsonWriter& begin_array() { return token("["); }
    JsonWriter& end_array() {
        first_ = false;
        out_ += "]";
        return *this;
    }
    JsonWriter& key(const std::string& k) {
        comma();
        out_ += "\"" + k + "\":";
        first_ = true;  // suppress comma before the value
        return *this;
    }
    JsonWriter& number(double v) {
        comma();
        out_ += std::isfinite(v) ? format_double(v) : "null";
        return *this;
    }
    JsonWriter& boolean(bool v) {
        comma();
        out_ += v ? "true" : "false";
        return *this;
    }
    JsonWriter& string(const std::string& s) {
        comma();
        out_ += "\"" + s + "\"";
        return *this;
    }
    JsonWriter& null() {
        comma();
        out_ += "null";
        return *this;
    }
    const std::string& str() const { return out_; }

  private:
    JsonWriter& token(const char* t) {
        comma();
        out_ += t;
        first_ = true;
        return *this;
    }
    void comma() {
        if (!first_) out_ += ",";
        first_ = false;
    }
    std::string out_;
    bool first_ = true;
};

void json_number_array(JsonWriter& w, const std::vector<double>& values) {
    w.begin_array();
    for (double v : values) w.number(v);
    w.end_array();
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SupportSamples read_support_csv(const std::string& path) {
    const auto table = read_csv(path, 2, 2);
    expect_header(table, {"theta", "p"}, path);
    SupportSamples s;
    for (const auto& row : table.rows) {
        s.theta.push_back(row[0]);
        s.p.push_back(row[1]);
    }
    return s;
}

FamilySamples read_family_csv(const std::string& path) {
    const auto table = read_csv(path, 3, 3);
    expect_header(table, {"theta", "p", "t"}, path);
    FamilySamples s;
    for (const auto& row : table.rows) {
        s.theta.push_back(row[0]);
        s.p.push_back(row[1]);
        s.t.push_back(row[2]);
    }
    return s;
}

Curve read_curve_csv(const std::string& path) {
    const auto table = read_csv(path, 4, 7);
    expect_header(table, {"theta", "x", "y", "z"}, path);
    const bool has_d = table.header.size() >= 7;
    if (table.header.size() != 4 && !has_d) {
        throw Error(ErrorCode::ParseError, path + ":1: expected 4 or 7 columns");
    }
    std::vector<CurveSample> samples;
    samples.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        CurveSample s;
        s.theta = row[0];
        s.point = {row[1], row[2], row[3]};
        if (has_d) s.d1 = Point3{row[4], row[5], row[6]};
        samples.push_back(s);
    }
    return Curve(std::move(samples));
}

void write_support_csv(const std::string& path, const std::vector<double>& grid, const SupportFunction& p) {
    auto out = open_out(path);
    out << "theta,p\n";
    for (double theta : grid) {
        out << format_double(theta) << "," << format_double(p.value(theta)) << "\n";
    }
}

void write_family_csv(const std::string& path, const FamilySpec& fam) {
    auto out = open_out(path);
    out << "theta,p,t\n";
    for (double theta : fam.grid) {
        out << format_double(theta) << "," << format_double(fam.support.value(theta)) << ","
            << format_double(fam.height.value(theta)) << "\n";
    }
}

void write_curve_csv(const std::string& path, const Curve& c, bool derivatives) {
    bool all_d1 = derivatives;
    for (const auto& s : c.samples()) all_d1 = all_d1 && s.d1.has_value();
    auto out = open_out(path);
    out << (all_d1 ? "theta,x,y,z,dx,dy,dz\n" : "theta,x,y,z\n");
    for (const auto& s : c.samples()) {
        out << format_double(s.theta) << "," << format_double(s.point.x) << "," << format_double(s.point.y)
            << "," << format_double(s.point.z);
        if (all_d1) {
            out << "," << format_double(s.d1->x) << "," << format_double(s.d1->y) << ","
                << format_double(s.d1->z);
        }
        out << "\n";
    }
}

std::string curve_json(const Curve& c, bool derivatives) {
    bool all_d1 = derivatives;
    for (const auto& s : c.samples()) all_d1 = all_d1 && s.d1.has_value();
    JsonWriter w;
    w.begin_object();
    auto column = [&](const char* name, auto&& getter) {
        w.key(name);
        w.begin_array();
        for (const auto& s : c.samples()) w.number(getter(s));
        w.end_array();
    };
    column("theta", [](const CurveSample& s) { return s.theta; });
    column("x", [](const CurveSample& s) { return s.point.x; });
    column("y", [](const CurveSample& s) { return s.point.y; });
    column("z", [](const CurveSample& s) { return s.point.z; });
    if (all_d1) {
        column("dx", [](const CurveSample& s) { return s.d1->x; });
        column("dy", [](const CurveSample& s) { return s.d1->y; });
        column("dz", [](const CurveSample& s) { return s.d1->z; });
    }
    w.end_object();
    return w.str();
}

std::string family_json(const FamilySpec& fam) {
    std::vector<double> p(fam.grid.size()), t(fam.grid.size());
    for (std::size_t i = 0; i < fam.grid.size(); ++i) {
        p[i] = fam.support.value(fam.grid[i]);
        t[i] = fam.height.value(fam.grid[i]);
    }
    JsonWriter w;
    w.begin_object();
    w.key("theta");
    json_number_array(w, fam.grid);
    w.key("p");
    json_number_array(w, p);
    w.key("t");
    json_number_array(w, t);
    w.end_object();
    return w.str();
}

std::string invariant_report_json(const InvariantReport& rep) {
    JsonWriter w;
    w.begin_object();
    w.key("k");
    json_number_array(w, rep.k);
    w.key("tau_sup").number(rep.tau_sup);
    w.key("length").number(rep.length);
    w.key("area_F").number(rep.area_F);
    w.key("z_drop").number(rep.z_drop);
    w.key("horiz_residual_sup").number(rep.horiz_residual_sup);
    w.end_object();
    return w.str();
}

namespace {

std::string sign_text(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "mixed"); }

}  // namespace

std::string pair_report_json(const PairReport& rep) {
    JsonWriter w;
    w.begin_object();
    w.key("residual_sup").number(rep.residual_sup);
    w.key("admissible").boolean(rep.admissible);
    w.key("case_label");
    if (rep.case_label == 0) {
        w.string("none");
    } else {
        w.number(rep.case_label);
    }
    w.key("interval").begin_array().number(rep.interval.first).number(rep.interval.second).end_array();
    w.key("observed_signs").begin_object();
    w.key("p1_d1").string(sign_text(rep.observed_signs.p1_d1));
    w.key("p2_d1").string(sign_text(rep.observed_signs.p2_d1));
    w.key("p2_d2").string(sign_text(rep.observed_signs.p2_d2));
    w.key("p1_d2").string(sign_text(rep.observed_signs.p1_d2));
    w.end_object();
    w.end_object();
    return w.str();
}

void write_svg(const std::string& path, const Curve& c, const FamilySpec* fam, std::size_t line_stride) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : c.samples()) {
        xmin = std::min(xmin, s.point.x);
        xmax = std::max(xmax, s.point.x);
        ymin = std::min(ymin, s.point.y);
        ymax = std::max(ymax, s.point.y);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-6});
    const double margin = 0.1 * span;
    xmin -= margin;
    ymin -= margin;
    const double width = (xmax + margin) - xmin;
    const double height = (ymax + margin) - ymin;
    const double scale = 640.0 / std::max(width, height);
    auto X = [&](double x) { return (x - xmin) * scale; };
    auto Y = [&](double y) { return (ymin + height - y) * scale; };  // flip y for SVG

    auto out = open_out(path);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.8g %.8g", width * scale, height * scale);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << buf << "\">\n";
    if (fam != nullptr && line_stride > 0) {
        const double reach = 2.0 * span;
        out << "  <g stroke=\"#9ecae1\" stroke-width=\"0.5\" opacity=\"0.7\">\n";
        for (std::size_t i = 0; i < fam->grid.size(); i += line_stride) {
            const double theta = fam->grid[i];
            const HorizontalLine l{fam->support.value(theta), theta, 0.0};
            const Point3 a = line_point(l, -reach);
            const Point3 b = line_point(l, reach);
            std::snprintf(buf, sizeof(buf), "x1=\"%.8g\" y1=\"%.8g\" x2=\"%.8g\" y2=\"%.8g\"", X(a.x), Y(a.y),
                          X(b.x), Y(b.y));
            out << "    <line " << buf << "/>\n";
        }
        out << "  </g>\n";
    }
    out << "  <polyline fill=\"none\" stroke=\"#08519c\" stroke-width=\"1.5\" points=\"";
    for (const auto& s : c.samples()) {
        std::snprintf(buf, sizeof(buf), "%.8g,%.8g ", X(s.point.x), Y(s.point.y));
        out << buf;
    }
    out << "\"/>\n</svg>\n";
}

}  // namespace henv
