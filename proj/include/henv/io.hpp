#pragma once

#include <string>
#include <vector>

#include "henv/construction.hpp"
#include "henv/envelope.hpp"
#include "henv/heisenberg.hpp"
#include "henv/line_family.hpp"

namespace henv {

/// Columns of a `theta,p` support CSV.
struct SupportSamples {
    std::vector<double> theta;
    std::vector<double> p;
};

/// Columns of a `theta,p,t` family CSV.
struct FamilySamples {
    std::vector<double> theta;
    std::vector<double> p;
    std::vector<double> t;
};

/// Shortest-faithful decimal form of a double (17 significant digits).
std::string format_double(double v);

SupportSamples read_support_csv(const std::string& path);
FamilySamples read_family_csv(const std::string& path);

/// Curve CSV `theta,x,y,z[,dx,dy,dz]`. Derivative columns populate d1 when
/// present; d1/d2 are left unset otherwise.
Curve read_curve_csv(const std::string& path);

void write_support_csv(const std::string& path, const std::vector<double>& grid, const SupportFunction& p);
void write_family_csv(const std::string& path, const FamilySpec& fam);
void write_curve_csv(const std::string& path, const Curve& c, bool derivatives = true);

/// JSON mirrors with the same field names as the CSV columns.
std::string curve_json(const Curve& c, bool derivatives = true);
std::string family_json(const FamilySpec& fam);

std::string invariant_report_json(const InvariantReport& rep);
std::string pair_report_json(const PairReport& rep);

/// xy-projection of the curve, optionally overlaid with every stride-th
/// support line of the family.
void write_svg(const std::string& path, const Curve& c, const FamilySpec* fam = nullptr,
               std::size_t line_stride = 32);

}  // namespace henv
