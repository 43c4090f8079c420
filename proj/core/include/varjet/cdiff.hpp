#pragma once

#include "varjet/expr.hpp"

#include <map>
#include <utility>
#include <vector>

namespace varjet {

/// Scalar-valued total-derivative operator on the interior jet space:
/// a finite sum  sum_{k,sigma} a_{k,sigma} D_sigma  acting on the k-th
/// component of a generating section. Absent keys mean 0.
class CDiffOp {
 public:
  using Key = std::pair<int, MultiIndex>;  // (k, sigma)

  explicit CDiffOp(const Context& ctx);

  static CDiffOp zero(const Context& ctx) { return CDiffOp(ctx); }

  /// Merges coeff into the (k, sigma) slot; zero results are dropped.
  CDiffOp& add_term(int component, const MultiIndex& sigma, const Expr& coeff);

  const Context& context() const noexcept { return ctx_; }
  const std::map<Key, Expr>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Max |sigma| over the support (0 for the zero operator).
  int order() const noexcept;

  /// sum a_{k,sigma} D_sigma(chi^k); chi must have m components.
  Expr apply(const GeneratingSection& chi) const;

  CDiffOp operator+(const CDiffOp& other) const;
  CDiffOp scaled(const Expr& factor) const;

  bool operator==(const CDiffOp& other) const;

 private:
  Context ctx_;
  std::map<Key, Expr> coeffs_;
};

/// The components of the formal adjoint applied to 1:
/// h_k = sum_sigma (-1)^{|sigma|} D_sigma(a_{k,sigma}).
std::vector<Expr> adjoint_value(const CDiffOp& op);

/// Full coefficient-level adjoint for a single dependent variable (m = 1):
/// sum (-1)^{|sigma|} D_sigma . a_sigma, re-expanded into canonical
/// sum b_tau D_tau form. An involution on scalar operators.
CDiffOp formal_adjoint(const CDiffOp& op);

/// Which axis to peel when several entries of sigma are positive. Both
/// choices satisfy the Green identity; highest_axis pushes the normal
/// direction's content into eta_n deterministically and is the default.
enum class PeelStrategy { highest_axis, lowest_axis };

/// Integration-by-parts decomposition of an operator:
///   op(chi) = sum_k h_k * chi^k + sum_i D_i(eta_i(chi))
/// for every section chi, with h the adjoint value.
struct GreenDecomposition {
  std::vector<Expr> adjoint_value;  // h_1..h_m
  std::vector<CDiffOp> current;     // eta_1..eta_n
};

/// Repeatedly rewrites a D_sigma = D_i (a D_{sigma-1_i}) - (D_i a) D_{sigma-1_i},
/// accumulating the first term into eta_i, until only order-0 coefficients
/// remain; those form h. Terminates because the total order strictly drops.
GreenDecomposition green_decompose(const CDiffOp& op,
                                   PeelStrategy strategy = PeelStrategy::highest_axis);

}  // namespace varjet
