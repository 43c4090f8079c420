#pragma once

#include "varjet/expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace varjet {

/// Horizontal q-form: coefficients indexed by strictly increasing q-subsets
/// of the base axes {1..dim}, with dx_J ordered ascending. Absent subsets
/// mean 0; zero coefficients are dropped on insertion.
class HorizontalForm {
 public:
  HorizontalForm(const Context& ctx, int degree);

  static HorizontalForm zero(const Context& ctx, int degree) { return {ctx, degree}; }
  /// Degree-0 form from a scalar.
  static HorizontalForm scalar(Expr f);

  const Context& context() const noexcept { return ctx_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<std::vector<int>, Expr>& terms() const noexcept { return terms_; }

  /// Adds c * dx_axes; axes must be strictly increasing, within range, and
  /// of size degree(). Merges with any existing coefficient.
  HorizontalForm& add_term(std::vector<int> axes, Expr c);
  /// Coefficient on a subset (zero expression when absent).
  Expr coefficient(const std::vector<int>& axes) const;

  HorizontalForm operator+(const HorizontalForm& other) const;
  HorizontalForm operator-() const;

  bool operator==(const HorizontalForm& other) const;

  /// Display only, e.g. "(u1) dx[1,2] + (x1) dx[3]".
  std::string to_string() const;

 private:
  Context ctx_;
  int degree_;
  std::map<std::vector<int>, Expr> terms_;
};

}  // namespace varjet
