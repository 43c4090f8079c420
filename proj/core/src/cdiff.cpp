#include "varjet/cdiff.hpp"

#include "varjet/errors.hpp"
#include "varjet/jet.hpp"

#include <algorithm>
#include <functional>

namespace varjet {

CDiffOp::CDiffOp(const Context& ctx) : ctx_(ctx) {
  if (ctx.world != World::interior) {
    throw WorldError("CDiffOp coefficients live on the interior; use BoundaryCDiffOp");
  }
}

CDiffOp& CDiffOp::add_term(int component, const MultiIndex& sigma, const Expr& coeff) {
  if (component < 1 || component > ctx_.m) {
    throw IndexError("operator component " + std::to_string(component) + " out of range 1.." +
                     std::to_string(ctx_.m));
  }
  if (sigma.width() != ctx_.n) {
    throw IndexError("operator multi-index has width " + std::to_string(sigma.width()) +
                     ", expected " + std::to_string(ctx_.n));
  }
  if (coeff.context() != ctx_) throw WorldError("operator coefficient context mismatch");
  if (coeff.is_zero()) return *this;
  auto [it, inserted] = coeffs_.try_emplace({component, sigma}, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
  return *this;
}

int CDiffOp::order() const noexcept {
  int d = 0;
  for (const auto& [key, coeff] : coeffs_) d = std::max(d, key.second.order());
  return d;
}

Expr CDiffOp::apply(const GeneratingSection& chi) const {
  if (static_cast<int>(chi.size()) != ctx_.m) {
    throw IndexError("generating section has " + std::to_string(chi.size()) +
                     " components, expected " + std::to_string(ctx_.m));
  }
  for (const Expr& c : chi) {
    if (c.context() != ctx_) throw WorldError("generating section context mismatch");
  }
  Expr acc = Expr::zero(ctx_);
  for (const auto& [key, coeff] : coeffs_) {
    const auto& [k, sigma] = key;
    acc = acc + coeff * total_derivative(chi[static_cast<std::size_t>(k - 1)], sigma);
  }
  return acc;
}

CDiffOp CDiffOp::operator+(const CDiffOp& other) const {
  if (ctx_ != other.ctx_) throw WorldError("operator context mismatch");
  CDiffOp out = *this;
  for (const auto& [key, coeff] : other.coeffs_) out.add_term(key.first, key.second, coeff);
  return out;
}

CDiffOp CDiffOp::scaled(const Expr& factor) const {
  CDiffOp out(ctx_);
  for (const auto& [key, coeff] : coeffs_) out.add_term(key.first, key.second, coeff * factor);
  return out;
}

bool CDiffOp::operator==(const CDiffOp& other) const {
  return ctx_ == other.ctx_ && coeffs_ == other.coeffs_;
}

std::vector<Expr> adjoint_value(const CDiffOp& op) {
  const Context& ctx = op.context();
  std::vector<Expr> h(static_cast<std::size_t>(ctx.m), Expr::zero(ctx));
  for (const auto& [key, coeff] : op.coefficients()) {
    const auto& [k, sigma] = key;
    Expr d = total_derivative(coeff, sigma);
    h[static_cast<std::size_t>(k - 1)] =
        h[static_cast<std::size_t>(k - 1)] + (sigma.order() % 2 == 0 ? d : -d);
  }
  return h;
}

namespace {

long binomial(int n, int k) {
  long acc = 1;
  for (int j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
  return acc;
}

/// All tau <= sigma entrywise, odometer order.
void for_each_subindex(const MultiIndex& sigma, const std::function<void(const MultiIndex&)>& fn) {
  std::vector<int> tau(static_cast<std::size_t>(sigma.width()), 0);
  while (true) {
    fn(MultiIndex(tau));
    int axis = 0;
    while (axis < sigma.width()) {
      if (tau[static_cast<std::size_t>(axis)] < sigma.entries()[static_cast<std::size_t>(axis)]) {
        ++tau[static_cast<std::size_t>(axis)];
        break;
      }
      tau[static_cast<std::size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == sigma.width()) return;
  }
}

MultiIndex subtract(const MultiIndex& sigma, const MultiIndex& tau) {
  std::vector<int> out = sigma.entries();
  for (int axis = 1; axis <= sigma.width(); ++axis) {
    out[static_cast<std::size_t>(axis - 1)] -= tau.at(axis);
  }
  return MultiIndex(std::move(out));
}

}  // namespace

CDiffOp formal_adjoint(const CDiffOp& op) {
  const Context& ctx = op.context();
  if (ctx.m != 1) {
    throw IndexError("the coefficient-level adjoint is defined for a single "
                     "dependent variable (m = 1)");
  }
  // sum_sigma (-1)^{|sigma|} D_sigma . a_sigma expanded by the Leibniz rule:
  // the D_tau coefficient picks up binom(sigma, tau) D_{sigma-tau}(a_sigma).
  CDiffOp out(ctx);
  for (const auto& [key, coeff] : op.coefficients()) {
    const MultiIndex& sigma = key.second;
    const int sign = sigma.order() % 2 == 0 ? 1 : -1;
    for_each_subindex(sigma, [&](const MultiIndex& tau) {
      long factor = sign;
      for (int axis = 1; axis <= sigma.width(); ++axis) {
        factor *= binomial(sigma.at(axis), tau.at(axis));
      }
      Expr term = total_derivative(coeff, subtract(sigma, tau)) *
                  Expr::constant(ctx, Rational(factor));
      out.add_term(1, tau, term);
    });
  }
  return out;
}

namespace {

/// Axis to peel: some sigma_axis > 0 is guaranteed.
int peel_axis(const MultiIndex& sigma, PeelStrategy strategy) {
  if (strategy == PeelStrategy::highest_axis) {
    for (int axis = sigma.width(); axis >= 1; --axis) {
      if (sigma.at(axis) > 0) return axis;
    }
  } else {
    for (int axis = 1; axis <= sigma.width(); ++axis) {
      if (sigma.at(axis) > 0) return axis;
    }
  }
  throw Error("peel called on an order-0 coefficient");
}

}  // namespace

GreenDecomposition green_decompose(const CDiffOp& op, PeelStrategy strategy) {
  const Context& ctx = op.context();
  std::map<CDiffOp::Key, Expr> work = op.coefficients();
  std::vector<CDiffOp> current(static_cast<std::size_t>(ctx.n), CDiffOp(ctx));

  while (true) {
    // Deterministic pick: the largest key still carrying derivatives.
    auto pick = work.end();
    for (auto it = work.rbegin(); it != work.rend(); ++it) {
      if (it->first.second.order() >= 1) {
        pick = std::prev(it.base());
        break;
      }
    }
    if (pick == work.end()) break;

    const int k = pick->first.first;
    const MultiIndex sigma = pick->first.second;
    const Expr a = pick->second;
    work.erase(pick);

    // a D_sigma = D_axis (a D_{sigma-1_axis}) - (D_axis a) D_{sigma-1_axis}
    const int axis = peel_axis(sigma, strategy);
    const MultiIndex reduced = sigma.minus(axis);
    current[static_cast<std::size_t>(axis - 1)].add_term(k, reduced, a);
    Expr da = total_derivative(a, axis);
    if (!da.is_zero()) {
      auto [it, inserted] = work.try_emplace({k, reduced}, -da);
      if (!inserted) {
        it->second = it->second - da;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }

  std::vector<Expr> h(static_cast<std::size_t>(ctx.m), Expr::zero(ctx));
  for (const auto& [key, coeff] : work) {
    h[static_cast<std::size_t>(key.first - 1)] =
        h[static_cast<std::size_t>(key.first - 1)] + coeff;
  }
  return {std::move(h), std::move(current)};
}

}  // namespace varjet
