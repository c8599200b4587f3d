#pragma once

#include <vector>

#include "henv/heisenberg.hpp"
#include "henv/line_family.hpp"

namespace henv {

/// Inverse problem: the tangent-line family (p, theta, t) of a horizontal,
/// horizontally regular curve. Theta comes from the projected tangent
/// direction (resolved to keep p >= 0 and theta continuous), then
/// p = x cos + y sin and t = z + (-x sin + y cos) p per sample.
FamilySpec recover_family(const Curve& c);

/// sup over nodes of |t' - ((p')^2 - p^2)| with finite-difference derivatives
/// of the recovered node values.
double fd_compatibility_residual(const FamilySpec& fam);

/// Independent envelope construction from the lines alone: consecutive
/// support lines intersected pairwise in the plane, lifted through the line
/// parametrization (both lifts averaged). Converges to the closed form as the
/// grid refines; needs at least 64 nodes.
Curve oracle_envelope(const FamilySpec& fam);

/// Per-node contact residual of the curve against its family: max of the two
/// plane-membership residuals and the tangent-alignment defect.
std::vector<double> tangency_check(const FamilySpec& fam, const Curve& c);

}  // namespace henv
