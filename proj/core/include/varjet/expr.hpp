#pragma once

#include "varjet/polynomial.hpp"

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace varjet {

enum class World { interior, boundary };

const char* world_name(World w);

/// The chart an expression lives on: the interior jet space over an
/// n-dimensional base with m dependent variables, or the boundary jet
/// space over {x_n = 0}. Base coordinates run 1..n interior and 1..n-1
/// on the boundary; jet multi-indices have the same width as the base.
struct Context {
  int n = 1;
  int m = 1;
  World world = World::interior;

  int base_dim() const noexcept { return world == World::interior ? n : n - 1; }
  int jet_width() const noexcept { return base_dim(); }

  Context interior() const noexcept { return {n, m, World::interior}; }
  Context boundary() const noexcept { return {n, m, World::boundary}; }

  bool operator==(const Context&) const = default;
};

/// Exact symbolic expression in canonical normal form: a quotient of two
/// canonical polynomials with the gcd cancelled and a monic denominator.
/// Values are immutable; all operations are pure.
class Expr {
 public:
  static Expr constant(const Context& ctx, Rational value);
  static Expr integer(const Context& ctx, long value) { return constant(ctx, Rational(value)); }
  static Expr zero(const Context& ctx) { return integer(ctx, 0); }
  static Expr one(const Context& ctx) { return integer(ctx, 1); }

  /// x_axis; axis in 1..base_dim.
  static Expr base_coord(const Context& ctx, int axis);
  /// u^k_sigma (interior contexts only).
  static Expr jet_var(const Context& ctx, int component, const MultiIndex& sigma);
  /// (u_i^k)_tau (boundary contexts only).
  static Expr normal_jet_var(const Context& ctx, int component, int normal_order,
                             const MultiIndex& tau);
  static Expr fn_call(Fn fn, const Expr& arg);
  static Expr from_atom(const Context& ctx, const Atom& a);
  /// num/den, normalized; throws DivideByZeroError when den is the zero
  /// polynomial.
  static Expr from_quotient(const Context& ctx, Polynomial num, Polynomial den);

  const Context& context() const noexcept { return ctx_; }
  World world() const noexcept { return ctx_.world; }
  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> as_rational() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;

  Expr operator+(const Rational& c) const { return *this + constant(ctx_, c); }
  Expr operator*(const Rational& c) const { return *this * constant(ctx_, c); }

  /// Structural equality of normal forms (same context, same quotient).
  bool operator==(const Expr& other) const;
  /// Deterministic total order; used for keying opaque function calls.
  std::strong_ordering operator<=>(const Expr& other) const;

  /// Canonical print. parse(to_string(), context()) reproduces the value.
  std::string to_string() const;

 private:
  Expr(Context ctx, Polynomial num, Polynomial den)
      : ctx_(ctx), num_(std::move(num)), den_(std::move(den)) {}

  Context ctx_;
  Polynomial num_;
  Polynomial den_;
};

Expr pow(const Expr& base, int exponent);

/// Point assignment for numeric probing: values for every leaf atom.
using Assignment = std::map<Atom, double>;

/// Formal partial derivative treating distinct atoms as independent, with
/// the chain rule through opaque function calls. v must name a base
/// coordinate or jet variable of e's world.
Expr partial(const Expr& e, const Atom& v);

/// Floating evaluation; throws EvalError on an unassigned atom, a pole of
/// the quotient, or a log/sqrt domain violation.
double eval(const Expr& e, const Assignment& point);

/// All leaf atoms (base coordinates and jet variables), descending into
/// function-call arguments. FnCall atoms themselves are not leaves.
std::set<Atom> leaf_atoms(const Expr& e);

/// Derivation engine: extends a rule on leaf atoms to the whole algebra by
/// linearity, the Leibniz rule, the quotient rule, and the chain rule
/// through function calls. The rule receives only non-FnCall atoms and
/// must return expressions in e's context.
using LeafDerivative = std::function<Expr(const Atom&)>;
Expr derive(const Expr& e, const LeafDerivative& rule);

/// Substitution engine: atomwise image of e under a map sending each leaf
/// atom to an expression in the target context; function calls are rebuilt
/// around the mapped argument. Throws DivideByZeroError when the image of
/// a denominator vanishes.
using AtomSubstitution = std::function<Expr(const Atom&)>;
Expr map_atoms(const Expr& e, const Context& target, const AtomSubstitution& sub);

/// Component list of a generating section (chi or psi); length must be m.
using GeneratingSection = std::vector<Expr>;

}  // namespace varjet
