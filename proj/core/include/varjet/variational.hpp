#pragma once

#include "varjet/boundary.hpp"
#include "varjet/cdiff.hpp"
#include "varjet/expr.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace varjet {

/// Output of the relative Euler operator on a Lagrangian density f:
/// the Euler-Lagrange expressions and the transversality table theta,
/// indexed by (component k, normal order i). theta = 0 on {x_n = 0} is the
/// natural boundary condition of the free-boundary variational problem.
struct RelativeEulerResult {
  std::vector<Expr> el;                        // m entries
  std::map<std::pair<int, int>, Expr> theta;   // finite support, zeros dropped
};

/// Euler-Lagrange expressions: adjoint_value(linearization(f)).
std::vector<Expr> euler(const Expr& f);

/// Pipeline: linearize f, Green-decompose, restrict the normal component
/// eta_n of the boundary current, and take its boundary adjoint value.
/// The result does not depend on the peel strategy.
RelativeEulerResult relative_euler(const Expr& f,
                                   PeelStrategy strategy = PeelStrategy::highest_axis);

/// Numeric witness of the first-variation decomposition:
/// evaluates  evolutionary(chi, f) - sum_k el_k chi^k - sum_i D_i(eta_i(chi))
/// at each point, each piece in floating point, and reports the largest
/// relative residual.
struct FirstVariationReport {
  std::vector<double> residuals;  // one per point, relative
  double max_residual = 0.0;
  bool passed = false;            // max_residual <= 1e-9
};

FirstVariationReport check_first_variation(const Expr& f, const GeneratingSection& chi,
                                           const std::vector<Assignment>& points);

/// Deterministic probe points covering every leaf atom of the given
/// expressions. Values are drawn positive and away from zero so that the
/// whitelisted functions stay in domain; a point on which any cover
/// expression fails to evaluate is redrawn.
std::vector<Assignment> probe_points(const std::vector<Expr>& cover, int count,
                                     std::uint64_t seed);

}  // namespace varjet
