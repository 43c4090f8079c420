#pragma once

#include "varjet/cdiff.hpp"
#include "varjet/expr.hpp"
#include "varjet/horizontal_form.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace varjet {

/// Generating section on the boundary jet space: finite mapping
/// (k, normal order i) -> psi_i^k. Absent components are 0.
using BoundaryGeneratingSection = std::map<std::pair<int, int>, Expr>;

/// Scalar-valued tangential total-derivative operator on the boundary:
/// a finite sum  sum_{k,i,tau} b_{k,i,tau} D_tau  acting on the (k,i)-th
/// component of a boundary generating section.
class BoundaryCDiffOp {
 public:
  using Key = std::tuple<int, int, MultiIndex>;  // (k, i, tau)

  explicit BoundaryCDiffOp(const Context& ctx);

  static BoundaryCDiffOp zero(const Context& ctx) { return BoundaryCDiffOp(ctx); }

  BoundaryCDiffOp& add_term(int component, int normal_order, const MultiIndex& tau,
                            const Expr& coeff);

  const Context& context() const noexcept { return ctx_; }
  const std::map<Key, Expr>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int order() const noexcept;

  /// sum b_{k,i,tau} D_tau(psi_i^k); absent psi components count as 0.
  Expr apply(const BoundaryGeneratingSection& psi) const;

  bool operator==(const BoundaryCDiffOp& other) const;

 private:
  Context ctx_;
  std::map<Key, Expr> coeffs_;
};

/// Pullback to {x_n = 0}: x_i -> x_i (i < n), x_n -> 0,
/// u^k_sigma -> (u^k_{sigma_n})_{sigma - sigma_n 1_n}, extended atomwise.
Expr pullback(const Expr& f);

/// Pullback of a horizontal form: basis subsets containing the normal axis
/// drop out, the rest keep their (pulled back) coefficients. A degree-n
/// input yields the zero form capped at the boundary's top degree.
HorizontalForm pullback_form(const HorizontalForm& omega);

/// Tangential total derivative on the boundary, axis in 1..n-1.
Expr boundary_total_derivative(const Expr& g, int axis);

/// Iterated tangential derivative D_tau.
Expr boundary_total_derivative(const Expr& g, const MultiIndex& tau);

/// Boundary universal linearization: coefficient dg/d(u_i^k)_tau on
/// D_tau of component (k, i).
BoundaryCDiffOp boundary_linearization(const Expr& g);

/// sum D_tau(psi_i^k) dg/d(u_i^k)_tau = boundary_linearization(g).apply(psi).
Expr boundary_evolutionary(const BoundaryGeneratingSection& psi, const Expr& g);

/// Restriction of an interior operator to the boundary: each a_{k,sigma} D_sigma
/// maps to pullback(a_{k,sigma}) D_tau on component (k, i) with i = sigma_n
/// and tau the tangential part; images merge by addition.
BoundaryCDiffOp restrict_operator(const CDiffOp& op);

/// Componentwise adjoint value using tangential derivatives only:
/// (k, i) -> sum_tau (-1)^{|tau|} D_tau(b_{k,i,tau}). Zero entries dropped.
std::map<std::pair<int, int>, Expr> boundary_adjoint_value(const BoundaryCDiffOp& op);

/// Membership test for the relative ideal: true iff the pullback of the
/// form to the boundary vanishes.
bool is_relative(const HorizontalForm& omega);

/// Atomwise section of the pullback: x_j -> x_j, (u_i^k)_tau -> u^k_{(tau,i)},
/// extended through function calls. pullback(lift_section(g)) == g.
Expr lift_section(const Expr& g);

/// Canonical preimage of a boundary operator: D_tau on component (k, i)
/// becomes D_{(tau,i)} on component k, with coefficients lifted by
/// lift_section. restrict_operator(lift_operator(op)) == op.
CDiffOp lift_operator(const BoundaryCDiffOp& op);

}  // namespace varjet
