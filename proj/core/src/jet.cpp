#include "varjet/jet.hpp"

#include "varjet/boundary.hpp"
#include "varjet/errors.hpp"

#include <algorithm>

namespace varjet {

Expr total_derivative(const Expr& f, int axis) {
  const Context& ctx = f.context();
  if (ctx.world != World::interior) {
    throw WorldError("total derivative is an interior operation; use "
                     "boundary_total_derivative on the boundary");
  }
  if (axis < 1 || axis > ctx.n) {
    throw IndexError("total derivative axis " + std::to_string(axis) + " out of range 1.." +
                     std::to_string(ctx.n));
  }
  return derive(f, [&](const Atom& a) {
    if (const auto* b = a.as_base_coord()) {
      return b->axis == axis ? Expr::one(ctx) : Expr::zero(ctx);
    }
    const auto* j = a.as_jet_var();
    return Expr::jet_var(ctx, j->component, j->sigma.plus(axis));
  });
}

Expr total_derivative(const Expr& f, const MultiIndex& sigma) {
  const Context& ctx = f.context();
  if (sigma.width() != ctx.n) {
    throw IndexError("iterated total derivative multi-index has width " +
                     std::to_string(sigma.width()) + ", expected " + std::to_string(ctx.n));
  }
  Expr out = f;
  for (int axis = 1; axis <= sigma.width(); ++axis) {
    for (int rep = 0; rep < sigma.at(axis); ++rep) out = total_derivative(out, axis);
  }
  return out;
}

CDiffOp linearization(const Expr& f) {
  const Context& ctx = f.context();
  if (ctx.world != World::interior) {
    throw WorldError("linearization is an interior operation; use boundary_linearization");
  }
  CDiffOp op(ctx);
  for (const Atom& a : leaf_atoms(f)) {
    if (const auto* j = a.as_jet_var()) {
      op.add_term(j->component, j->sigma, partial(f, a));
    }
  }
  return op;
}

Expr evolutionary(const GeneratingSection& psi, const Expr& f) {
  return linearization(f).apply(psi);
}

HorizontalForm horizontal_differential(const HorizontalForm& omega) {
  const Context& ctx = omega.context();
  const int dim = ctx.base_dim();
  if (omega.degree() == dim) return HorizontalForm::zero(ctx, dim);

  const bool interior = ctx.world == World::interior;
  HorizontalForm out(ctx, omega.degree() + 1);
  for (const auto& [axes, coeff] : omega.terms()) {
    for (int i = 1; i <= dim; ++i) {
      if (std::find(axes.begin(), axes.end(), i) != axes.end()) continue;
      std::vector<int> inserted = axes;
      auto where = std::lower_bound(inserted.begin(), inserted.end(), i);
      const int position = static_cast<int>(where - inserted.begin());
      inserted.insert(where, i);
      Expr d = interior ? total_derivative(coeff, i) : boundary_total_derivative(coeff, i);
      out.add_term(std::move(inserted), position % 2 == 0 ? d : -d);
    }
  }
  return out;
}

}  // namespace varjet
