#include "varjet/boundary.hpp"

#include "varjet/errors.hpp"
#include "varjet/jet.hpp"

#include <algorithm>

namespace varjet {

BoundaryCDiffOp::BoundaryCDiffOp(const Context& ctx) : ctx_(ctx) {
  if (ctx.world != World::boundary) {
    throw WorldError("BoundaryCDiffOp coefficients live on the boundary");
  }
}

BoundaryCDiffOp& BoundaryCDiffOp::add_term(int component, int normal_order,
                                           const MultiIndex& tau, const Expr& coeff) {
  if (component < 1 || component > ctx_.m) {
    throw IndexError("operator component " + std::to_string(component) + " out of range 1.." +
                     std::to_string(ctx_.m));
  }
  if (normal_order < 0) throw IndexError("normal order must be >= 0");
  if (tau.width() != ctx_.n - 1) {
    throw IndexError("operator multi-index has width " + std::to_string(tau.width()) +
                     ", expected " + std::to_string(ctx_.n - 1));
  }
  if (coeff.context() != ctx_) throw WorldError("operator coefficient context mismatch");
  if (coeff.is_zero()) return *this;
  auto [it, inserted] = coeffs_.try_emplace({component, normal_order, tau}, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
  return *this;
}

int BoundaryCDiffOp::order() const noexcept {
  int d = 0;
  for (const auto& [key, coeff] : coeffs_) d = std::max(d, std::get<2>(key).order());
  return d;
}

Expr BoundaryCDiffOp::apply(const BoundaryGeneratingSection& psi) const {
  for (const auto& [key, component] : psi) {
    if (component.context() != ctx_) throw WorldError("generating section context mismatch");
  }
  Expr acc = Expr::zero(ctx_);
  for (const auto& [key, coeff] : coeffs_) {
    const auto& [k, i, tau] = key;
    auto it = psi.find({k, i});
    if (it == psi.end()) continue;
    acc = acc + coeff * boundary_total_derivative(it->second, tau);
  }
  return acc;
}

bool BoundaryCDiffOp::operator==(const BoundaryCDiffOp& other) const {
  return ctx_ == other.ctx_ && coeffs_ == other.coeffs_;
}

Expr pullback(const Expr& f) {
  const Context& ctx = f.context();
  if (ctx.world != World::interior) throw WorldError("pullback expects an interior expression");
  const Context target = ctx.boundary();
  return map_atoms(f, target, [&](const Atom& a) {
    if (const auto* b = a.as_base_coord()) {
      if (b->axis == ctx.n) return Expr::zero(target);
      return Expr::base_coord(target, b->axis);
    }
    const auto* j = a.as_jet_var();
    const int normal_order = j->sigma.at(ctx.n);
    std::vector<int> tangential = j->sigma.entries();
    tangential.pop_back();
    return Expr::normal_jet_var(target, j->component, normal_order,
                                MultiIndex(std::move(tangential)));
  });
}

HorizontalForm pullback_form(const HorizontalForm& omega) {
  const Context& ctx = omega.context();
  if (ctx.world != World::interior) throw WorldError("pullback_form expects an interior form");
  const Context target = ctx.boundary();
  const int capped = std::min(omega.degree(), target.base_dim());
  HorizontalForm out(target, capped);
  if (omega.degree() > target.base_dim()) return out;  // only subsets containing x_n existed
  for (const auto& [axes, coeff] : omega.terms()) {
    if (std::find(axes.begin(), axes.end(), ctx.n) != axes.end()) continue;
    out.add_term(axes, pullback(coeff));
  }
  return out;
}

Expr boundary_total_derivative(const Expr& g, int axis) {
  const Context& ctx = g.context();
  if (ctx.world != World::boundary) {
    throw WorldError("boundary total derivative expects a boundary expression");
  }
  if (axis < 1 || axis > ctx.n - 1) {
    throw IndexError("boundary total derivative axis " + std::to_string(axis) +
                     " out of range 1.." + std::to_string(ctx.n - 1));
  }
  return derive(g, [&](const Atom& a) {
    if (const auto* b = a.as_base_coord()) {
      return b->axis == axis ? Expr::one(ctx) : Expr::zero(ctx);
    }
    const auto* nj = a.as_normal_jet_var();
    return Expr::normal_jet_var(ctx, nj->component, nj->normal_order, nj->tau.plus(axis));
  });
}

Expr boundary_total_derivative(const Expr& g, const MultiIndex& tau) {
  const Context& ctx = g.context();
  if (tau.width() != ctx.n - 1) {
    throw IndexError("iterated boundary derivative multi-index has width " +
                     std::to_string(tau.width()) + ", expected " + std::to_string(ctx.n - 1));
  }
  Expr out = g;
  for (int axis = 1; axis <= tau.width(); ++axis) {
    for (int rep = 0; rep < tau.at(axis); ++rep) out = boundary_total_derivative(out, axis);
  }
  return out;
}

BoundaryCDiffOp boundary_linearization(const Expr& g) {
  const Context& ctx = g.context();
  if (ctx.world != World::boundary) {
    throw WorldError("boundary_linearization expects a boundary expression");
  }
  BoundaryCDiffOp op(ctx);
  for (const Atom& a : leaf_atoms(g)) {
    if (const auto* nj = a.as_normal_jet_var()) {
      op.add_term(nj->component, nj->normal_order, nj->tau, partial(g, a));
    }
  }
  return op;
}

Expr boundary_evolutionary(const BoundaryGeneratingSection& psi, const Expr& g) {
  return boundary_linearization(g).apply(psi);
}

BoundaryCDiffOp restrict_operator(const CDiffOp& op) {
  const Context& ctx = op.context();
  BoundaryCDiffOp out(ctx.boundary());
  for (const auto& [key, coeff] : op.coefficients()) {
    const auto& [k, sigma] = key;
    const int normal_order = sigma.at(ctx.n);
    std::vector<int> tangential = sigma.entries();
    tangential.pop_back();
    Expr image = pullback(coeff);
    if (!image.is_zero()) out.add_term(k, normal_order, MultiIndex(std::move(tangential)), image);
  }
  return out;
}

std::map<std::pair<int, int>, Expr> boundary_adjoint_value(const BoundaryCDiffOp& op) {
  std::map<std::pair<int, int>, Expr> out;
  for (const auto& [key, coeff] : op.coefficients()) {
    const auto& [k, i, tau] = key;
    Expr d = boundary_total_derivative(coeff, tau);
    if (tau.order() % 2 != 0) d = -d;
    auto [it, inserted] = out.try_emplace({k, i}, d);
    if (!inserted) it->second = it->second + d;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool is_relative(const HorizontalForm& omega) {
  return pullback_form(omega).is_zero();
}

Expr lift_section(const Expr& g) {
  const Context& ctx = g.context();
  if (ctx.world != World::boundary) throw WorldError("lift_section expects a boundary expression");
  const Context target = ctx.interior();
  return map_atoms(g, target, [&](const Atom& a) {
    if (const auto* b = a.as_base_coord()) {
      return Expr::base_coord(target, b->axis);
    }
    const auto* nj = a.as_normal_jet_var();
    std::vector<int> sigma = nj->tau.entries();
    sigma.push_back(nj->normal_order);
    return Expr::jet_var(target, nj->component, MultiIndex(std::move(sigma)));
  });
}

CDiffOp lift_operator(const BoundaryCDiffOp& op) {
  const Context target = op.context().interior();
  CDiffOp out(target);
  for (const auto& [key, coeff] : op.coefficients()) {
    const auto& [k, i, tau] = key;
    std::vector<int> sigma = tau.entries();
    sigma.push_back(i);
    out.add_term(k, MultiIndex(std::move(sigma)), lift_section(coeff));
  }
  return out;
}

}  // namespace varjet
