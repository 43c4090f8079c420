#include "varjet/variational.hpp"

#include "varjet/errors.hpp"
#include "varjet/jet.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace varjet {

std::vector<Expr> euler(const Expr& f) {
  return adjoint_value(linearization(f));
}

RelativeEulerResult relative_euler(const Expr& f, PeelStrategy strategy) {
  const Context& ctx = f.context();
  GreenDecomposition green = green_decompose(linearization(f), strategy);
  RelativeEulerResult out;
  out.el = std::move(green.adjoint_value);
  const CDiffOp& eta_n = green.current[static_cast<std::size_t>(ctx.n - 1)];
  out.theta = boundary_adjoint_value(restrict_operator(eta_n));
  return out;
}

FirstVariationReport check_first_variation(const Expr& f, const GeneratingSection& chi,
                                           const std::vector<Assignment>& points) {
  const Context& ctx = f.context();
  const CDiffOp ell = linearization(f);
  const GreenDecomposition green = green_decompose(ell, PeelStrategy::highest_axis);

  const Expr lhs = ell.apply(chi);
  Expr pairing = Expr::zero(ctx);
  for (std::size_t k = 0; k < chi.size(); ++k) {
    pairing = pairing + green.adjoint_value[k] * chi[k];
  }
  std::vector<Expr> divergences;
  divergences.reserve(static_cast<std::size_t>(ctx.n));
  for (int axis = 1; axis <= ctx.n; ++axis) {
    divergences.push_back(
        total_derivative(green.current[static_cast<std::size_t>(axis - 1)].apply(chi), axis));
  }

  FirstVariationReport report;
  for (std::size_t p = 0; p < points.size(); ++p) {
    try {
      const double lhs_v = eval(lhs, points[p]);
      const double pairing_v = eval(pairing, points[p]);
      double divergence_v = 0.0;
      double scale = std::max({1.0, std::fabs(lhs_v), std::fabs(pairing_v)});
      for (const Expr& d : divergences) {
        const double dv = eval(d, points[p]);
        divergence_v += dv;
        scale = std::max(scale, std::fabs(dv));
      }
      const double residual = std::fabs(lhs_v - pairing_v - divergence_v) / scale;
      report.residuals.push_back(residual);
      report.max_residual = std::max(report.max_residual, residual);
    } catch (const EvalError& e) {
      throw EvalError(std::string(e.what()) + " (at probe point " + std::to_string(p) + ")");
    }
  }
  report.passed = report.max_residual <= 1e-9;
  return report;
}

std::vector<Assignment> probe_points(const std::vector<Expr>& cover, int count,
                                     std::uint64_t seed) {
  std::set<Atom> needed;
  for (const Expr& e : cover) {
    for (const Atom& a : leaf_atoms(e)) needed.insert(a);
  }

  std::mt19937_64 rng(seed);
  // Positive values away from zero keep log/sqrt in domain and quotients off
  // their poles for typical inputs; a failing draw is simply retried.
  auto draw = [&rng]() {
    return 0.25 + 1.5 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<Assignment> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      Assignment point;
      for (const Atom& a : needed) point.emplace(a, draw());
      try {
        for (const Expr& e : cover) (void)eval(e, point);
        points.push_back(std::move(point));
        placed = true;
      } catch (const EvalError&) {
        // redraw
      }
    }
    if (!placed) {
      throw EvalError("could not draw a probe point in the domain of every expression");
    }
  }
  return points;
}

}  // namespace varjet
