#include "varjet/expr.hpp"

#include "varjet/errors.hpp"

#include <cmath>

namespace varjet {

const char* world_name(World w) {
  return w == World::interior ? "interior" : "boundary";
}

namespace {

void require_same_context(const Expr& a, const Expr& b) {
  if (a.context() == b.context()) return;
  throw WorldError(std::string("context mismatch: (n=") + std::to_string(a.context().n) +
                   ", m=" + std::to_string(a.context().m) + ", " + world_name(a.world()) +
                   ") vs (n=" + std::to_string(b.context().n) + ", m=" +
                   std::to_string(b.context().m) + ", " + world_name(b.world()) + ")");
}

void validate_atom(const Context& ctx, const Atom& a) {
  if (const auto* b = a.as_base_coord()) {
    if (b->axis < 1 || b->axis > ctx.base_dim()) {
      throw IndexError("base coordinate x" + std::to_string(b->axis) + " out of range 1.." +
                       std::to_string(ctx.base_dim()) + " (" + world_name(ctx.world) + " world)");
    }
    return;
  }
  if (const auto* j = a.as_jet_var()) {
    if (ctx.world != World::interior) {
      throw WorldError("interior jet variable " + a.to_string() + " in a boundary expression");
    }
    if (j->component < 1 || j->component > ctx.m) {
      throw IndexError("component of " + a.to_string() + " out of range 1.." + std::to_string(ctx.m));
    }
    if (j->sigma.width() != ctx.n) {
      throw IndexError("multi-index of " + a.to_string() + " has width " +
                       std::to_string(j->sigma.width()) + ", expected " + std::to_string(ctx.n));
    }
    return;
  }
  if (const auto* nj = a.as_normal_jet_var()) {
    if (ctx.world != World::boundary) {
      throw WorldError("boundary jet variable " + a.to_string() + " in an interior expression");
    }
    if (nj->component < 1 || nj->component > ctx.m) {
      throw IndexError("component of " + a.to_string() + " out of range 1.." + std::to_string(ctx.m));
    }
    if (nj->tau.width() != ctx.n - 1) {
      throw IndexError("multi-index of " + a.to_string() + " has width " +
                       std::to_string(nj->tau.width()) + ", expected " + std::to_string(ctx.n - 1));
    }
    return;
  }
  const auto* f = a.as_fn_call();
  if (f->arg->context() != ctx) {
    throw WorldError("function argument context differs from the enclosing expression");
  }
}

std::string print_term_magnitude(const Rational& coef, const Monomial& mono) {
  Integer num = rational_num(coef);
  if (num < 0) num = -num;
  Integer den = rational_den(coef);
  std::string out;
  if (mono.is_one()) {
    out = num.str();
  } else {
    if (num != 1) out = num.str();
    for (const auto& [atom, exp] : mono.factors()) {
      if (!out.empty()) out += "*";
      out += atom.to_string();
      if (exp > 1) out += "^" + std::to_string(exp);
    }
  }
  if (den != 1) out += "/" + den.str();
  return out;
}

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, coef] = *it;
    const bool negative = coef < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += print_term_magnitude(coef, mono);
  }
  return out;
}

}  // namespace

Expr Expr::constant(const Context& ctx, Rational value) {
  return Expr(ctx, Polynomial::constant(std::move(value)), Polynomial::one());
}

Expr Expr::base_coord(const Context& ctx, int axis) {
  return from_atom(ctx, Atom::base_coord(axis));
}

Expr Expr::jet_var(const Context& ctx, int component, const MultiIndex& sigma) {
  return from_atom(ctx, Atom::jet_var(component, sigma));
}

Expr Expr::normal_jet_var(const Context& ctx, int component, int normal_order,
                          const MultiIndex& tau) {
  return from_atom(ctx, Atom::normal_jet_var(component, normal_order, tau));
}

Expr Expr::fn_call(Fn fn, const Expr& arg) {
  return from_atom(arg.context(), Atom::fn_call(fn, arg));
}

Expr Expr::from_atom(const Context& ctx, const Atom& a) {
  validate_atom(ctx, a);
  return Expr(ctx, Polynomial::atom(a), Polynomial::one());
}

Expr Expr::from_quotient(const Context& ctx, Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivideByZeroError("division by the zero polynomial");
  if (num.is_zero()) return Expr(ctx, Polynomial(), Polynomial::one());
  if (auto c = den.as_constant()) {
    return Expr(ctx, num.scaled(Rational(1) / *c), Polynomial::one());
  }
  Polynomial g = poly_gcd(num, den);
  if (auto c = g.as_constant(); !c || *c != 1) {
    num = poly_exact_divide(num, g);
    den = poly_exact_divide(den, g);
  }
  if (auto c = den.as_constant()) {
    return Expr(ctx, num.scaled(Rational(1) / *c), Polynomial::one());
  }
  const Rational lead = den.leading_coefficient();
  if (lead != 1) {
    num = num.scaled(Rational(1) / lead);
    den = den.scaled(Rational(1) / lead);
  }
  return Expr(ctx, std::move(num), std::move(den));
}

std::optional<Rational> Expr::as_rational() const {
  auto n = num_.as_constant();
  auto d = den_.as_constant();
  if (!n || !d) return std::nullopt;
  return *n / *d;
}

Expr operator+(const Expr& a, const Expr& b) {
  require_same_context(a, b);
  return Expr::from_quotient(a.ctx_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Expr operator-(const Expr& a, const Expr& b) {
  require_same_context(a, b);
  return Expr::from_quotient(a.ctx_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Expr operator*(const Expr& a, const Expr& b) {
  require_same_context(a, b);
  return Expr::from_quotient(a.ctx_, a.num_ * b.num_, a.den_ * b.den_);
}

Expr operator/(const Expr& a, const Expr& b) {
  require_same_context(a, b);
  return Expr::from_quotient(a.ctx_, a.num_ * b.den_, a.den_ * b.num_);
}

Expr Expr::operator-() const {
  return Expr(ctx_, -num_, den_);
}

bool Expr::operator==(const Expr& other) const {
  return ctx_ == other.ctx_ && num_ == other.num_ && den_ == other.den_;
}

std::strong_ordering Expr::operator<=>(const Expr& other) const {
  if (auto c = ctx_.n <=> other.ctx_.n; c != 0) return c;
  if (auto c = ctx_.m <=> other.ctx_.m; c != 0) return c;
  if (auto c = static_cast<int>(ctx_.world) <=> static_cast<int>(other.ctx_.world); c != 0) return c;
  if (auto c = num_ <=> other.num_; c != 0) return c;
  return den_ <=> other.den_;
}

std::string Expr::to_string() const {
  if (den_.is_constant()) {
    return print_polynomial(num_);
  }
  std::string ns = print_polynomial(num_);
  if (num_.term_count() > 1) ns = "(" + ns + ")";
  std::string ds = print_polynomial(den_);
  const bool bare_den = den_.term_count() == 1 && den_.leading_coefficient() == 1 &&
                        den_.leading_monomial().factors().size() == 1;
  if (!bare_den) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

Expr pow(const Expr& base, int exponent) {
  const Context& ctx = base.context();
  if (exponent == 0) return Expr::one(ctx);
  const int e = exponent < 0 ? -exponent : exponent;
  Polynomial n = base.numerator().pow(e);
  Polynomial d = base.denominator().pow(e);
  if (exponent < 0) std::swap(n, d);
  return Expr::from_quotient(ctx, std::move(n), std::move(d));
}

// ---------------------------------------------------------------------------
// Calculus engines
// ---------------------------------------------------------------------------

namespace {

Expr fn_derivative(Fn fn, const Expr& arg) {
  const Context& ctx = arg.context();
  switch (fn) {
    case Fn::sin: return Expr::fn_call(Fn::cos, arg);
    case Fn::cos: return -Expr::fn_call(Fn::sin, arg);
    case Fn::tan: {
      Expr t = Expr::fn_call(Fn::tan, arg);
      return Expr::one(ctx) + t * t;
    }
    case Fn::exp: return Expr::fn_call(Fn::exp, arg);
    case Fn::log: return Expr::one(ctx) / arg;
    case Fn::sqrt: return Expr::one(ctx) / (Expr::integer(ctx, 2) * Expr::fn_call(Fn::sqrt, arg));
  }
  throw Error("unknown function");
}

Expr derive_atom(const Atom& a, const Context& ctx, const LeafDerivative& rule) {
  if (const auto* f = a.as_fn_call()) {
    Expr inner = derive(*f->arg, rule);
    if (inner.is_zero()) return Expr::zero(ctx);
    return fn_derivative(f->fn, *f->arg) * inner;
  }
  return rule(a);
}

Expr derive_polynomial(const Polynomial& p, const Context& ctx, const LeafDerivative& rule) {
  Expr acc = Expr::zero(ctx);
  for (const auto& [mono, coef] : p.terms()) {
    const auto& factors = mono.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      Expr d = derive_atom(factors[i].first, ctx, rule);
      if (d.is_zero()) continue;
      // coef * exp_i * (mono with one power of atom_i removed) * d
      Monomial rest;
      {
        std::vector<std::pair<Atom, int>> fs = factors;
        if (--fs[i].second == 0) fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
        rest = Monomial(std::move(fs));
      }
      Polynomial part = Polynomial::term(coef * factors[i].second, rest);
      acc = acc + Expr::from_quotient(ctx, std::move(part), Polynomial::one()) * d;
    }
  }
  return acc;
}

}  // namespace

Expr derive(const Expr& e, const LeafDerivative& rule) {
  const Context& ctx = e.context();
  Expr dn = derive_polynomial(e.numerator(), ctx, rule);
  if (e.denominator().is_constant()) {
    return dn;  // denominator is 1
  }
  Expr dd = derive_polynomial(e.denominator(), ctx, rule);
  Expr den_expr = Expr::from_quotient(ctx, e.denominator(), Polynomial::one());
  Expr num_expr = Expr::from_quotient(ctx, e.numerator(), Polynomial::one());
  return (dn * den_expr - num_expr * dd) / (den_expr * den_expr);
}

Expr partial(const Expr& e, const Atom& v) {
  const Context& ctx = e.context();
  if (v.as_fn_call()) {
    throw WorldError("partial derivative with respect to an opaque function call");
  }
  if (v.as_jet_var() && ctx.world != World::interior) {
    throw WorldError("interior jet variable in a boundary partial derivative");
  }
  if (v.as_normal_jet_var() && ctx.world != World::boundary) {
    throw WorldError("boundary jet variable in an interior partial derivative");
  }
  validate_atom(ctx, v);
  return derive(e, [&](const Atom& a) {
    return a == v ? Expr::one(ctx) : Expr::zero(ctx);
  });
}

namespace {

double eval_atom(const Atom& a, const Assignment& point);

double eval_polynomial(const Polynomial& p, const Assignment& point) {
  double acc = 0.0;
  for (const auto& [mono, coef] : p.terms()) {
    double term = to_double(coef);
    for (const auto& [atom, exp] : mono.factors()) {
      term *= std::pow(eval_atom(atom, point), exp);
    }
    acc += term;
  }
  return acc;
}

double eval_quotient(const Polynomial& num, const Polynomial& den, const Assignment& point) {
  double n = eval_polynomial(num, point);
  if (auto d = den.as_constant()) return n;  // den == 1 by normalization
  double d = eval_polynomial(den, point);
  if (d == 0.0) throw EvalError("pole: the denominator evaluates to zero");
  return n / d;
}

double eval_atom(const Atom& a, const Assignment& point) {
  if (const auto* f = a.as_fn_call()) {
    double x = eval_quotient(f->arg->numerator(), f->arg->denominator(), point);
    switch (f->fn) {
      case Fn::sin: return std::sin(x);
      case Fn::cos: return std::cos(x);
      case Fn::tan: return std::tan(x);
      case Fn::exp: return std::exp(x);
      case Fn::log:
        if (x <= 0.0) throw EvalError("log of a non-positive value");
        return std::log(x);
      case Fn::sqrt:
        if (x < 0.0) throw EvalError("sqrt of a negative value");
        return std::sqrt(x);
    }
    throw EvalError("unknown function");
  }
  auto it = point.find(a);
  if (it == point.end()) throw EvalError("unassigned atom '" + a.to_string() + "'");
  return it->second;
}

}  // namespace

double eval(const Expr& e, const Assignment& point) {
  return eval_quotient(e.numerator(), e.denominator(), point);
}

namespace {

void collect_polynomial_atoms(const Polynomial& p, std::set<Atom>& out) {
  for (const auto& [mono, coef] : p.terms()) {
    for (const auto& [atom, exp] : mono.factors()) {
      if (const auto* f = atom.as_fn_call()) {
        collect_polynomial_atoms(f->arg->numerator(), out);
        collect_polynomial_atoms(f->arg->denominator(), out);
      } else {
        out.insert(atom);
      }
    }
  }
}

}  // namespace

std::set<Atom> leaf_atoms(const Expr& e) {
  std::set<Atom> out;
  collect_polynomial_atoms(e.numerator(), out);
  collect_polynomial_atoms(e.denominator(), out);
  return out;
}

namespace {

Expr map_polynomial(const Polynomial& p, const Context& src, const Context& target,
                    const AtomSubstitution& sub) {
  Expr acc = Expr::zero(target);
  for (const auto& [mono, coef] : p.terms()) {
    Expr term = Expr::constant(target, coef);
    for (const auto& [atom, exp] : mono.factors()) {
      Expr image = [&] {
        if (const auto* f = atom.as_fn_call()) {
          return Expr::fn_call(f->fn, map_atoms(*f->arg, target, sub));
        }
        return sub(atom);
      }();
      if (image.context() != target) {
        throw WorldError("atom substitution produced a value in the wrong context");
      }
      term = term * pow(image, exp);
      if (term.is_zero()) break;
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

Expr map_atoms(const Expr& e, const Context& target, const AtomSubstitution& sub) {
  Expr num = map_polynomial(e.numerator(), e.context(), target, sub);
  if (e.denominator().as_constant()) return num;
  Expr den = map_polynomial(e.denominator(), e.context(), target, sub);
  return num / den;  // throws DivideByZeroError when the image vanishes
}

}  // namespace varjet
