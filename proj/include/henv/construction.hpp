#pragma once

#include <optional>
#include <span>
#include <utility>

#include "henv/line_family.hpp"
#include "henv/support.hpp"

namespace henv {

/// Signs observed on a dense sample: +1, -1, or 0 for mixed/vanishing.
struct ObservedSigns {
    int p1_d1 = 0;
    int p2_d1 = 0;
    int p2_d2 = 0;
    int p1_d2 = 0;
};

/// Result of the pair-admissibility and sign-classification checks.
struct PairReport {
    double residual_sup = 0.0;                 // sup |p1 p2 - p1' p2'|
    bool admissible = false;                   // residual_sup <= pair tolerance
    int case_label = 0;                        // 1..4 per the sign table, 0 = none
    std::pair<double, double> interval{0.0, 0.0};
    ObservedSigns observed_signs;
    std::optional<bool> conclusion_holds;      // set when case_label is 1..4
};

/// Family of the sums p1+p2, t1+t2 on the shared grid. The result may
/// violate the compatibility condition; that is exactly what
/// check_pair_condition decides.
FamilySpec sum_family(const FamilySpec& f1, const FamilySpec& f2);

/// Admissibility of the sum construction: p1 p2 = p1' p2' on the grid.
PairReport check_pair_condition(const SupportFunction& p1, const SupportFunction& p2,
                                std::span<const double> grid);

/// Sign classification on [a, b]: requires p1, p2 > 0 and p1', p2', p2'' of
/// constant nonzero sign on a dense sample, then matches the sign table and
/// verifies the concluded sign of p1''. The observed signs are reported
/// verbatim, so a failing conclusion is recorded rather than asserted.
PairReport classify_pair(const SupportFunction& p1, const SupportFunction& p2, double a, double b,
                         std::size_t dense_intervals = 1024);

/// The unique admissible partner of p2 on [a, b] with value p1_at_a at a:
/// p1(theta) = p1(a) exp(int_a^theta p2/p2'). Carried in log space so the
/// defining identity p1' = p1 p2 / p2' holds by construction.
SupportFunction exponential_partner(const SupportFunction& p2, double p1_at_a, double a, double b,
                                    std::span<const double> grid);

}  // namespace henv
