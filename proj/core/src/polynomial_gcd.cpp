#include "varjet/errors.hpp"
#include "varjet/polynomial.hpp"

#include <algorithm>
#include <map>
#include <optional>

// Multivariate gcd over Q by primitive pseudo-remainder sequences, recursing
// on the number of distinct atoms. Atoms (including opaque function calls)
// are independent variables here.

namespace varjet {

namespace {

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading_coefficient());
}

/// Greatest atom occurring in p, if any.
std::optional<Atom> greatest_atom(const Polynomial& p) {
  std::optional<Atom> best;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.factors().empty()) continue;
    const Atom& a = mono.factors().back().first;
    if (!best || *best < a) best = a;
  }
  return best;
}

int degree_in(const Polynomial& p, const Atom& v) {
  int d = 0;
  for (const auto& [mono, c] : p.terms()) d = std::max(d, mono.degree_in(v));
  return d;
}

/// View p as a univariate polynomial in v with Polynomial coefficients.
std::map<int, Polynomial> univariate_view(const Polynomial& p, const Atom& v) {
  std::map<int, Polynomial> out;
  for (const auto& [mono, c] : p.terms()) {
    int e = mono.degree_in(v);
    Monomial rest = e > 0 ? mono.divide(Monomial::atom(v, e)) : mono;
    out[e].add_term(rest, c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Polynomial times_power(const Polynomial& p, const Atom& v, int e) {
  if (e == 0) return p;
  return p * Polynomial::term(1, Monomial::atom(v, e));
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b);

/// gcd of the v-coefficients.
Polynomial content(const Polynomial& p, const Atom& v) {
  Polynomial acc;
  for (const auto& [e, coeff] : univariate_view(p, v)) {
    acc = gcd_recursive(acc, coeff);
    if (!acc.is_zero() && acc.is_constant()) break;
  }
  return acc;
}

/// Pseudo-remainder of a by b in the variable v (deg_v a >= deg_v b >= 1).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const Atom& v) {
  const int db = degree_in(b, v);
  auto bv = univariate_view(b, v);
  const Polynomial& lb = bv.rbegin()->second;

  Polynomial r = a;
  int e = degree_in(a, v) - db + 1;
  while (!r.is_zero()) {
    int dr = degree_in(r, v);
    if (dr < db) break;
    auto rv = univariate_view(r, v);
    const Polynomial& lr = rv.rbegin()->second;
    r = lb * r - times_power(lr * b, v, dr - db);
    --e;
  }
  for (; e > 0; --e) r = lb * r;
  return r;
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::one();

  auto va = greatest_atom(a);
  auto vb = greatest_atom(b);
  Atom v = (*va < *vb) ? *vb : *va;

  // A common divisor of a polynomial free of v is free of v, hence divides
  // the other side's v-content.
  if (degree_in(a, v) == 0) return gcd_recursive(a, content(b, v));
  if (degree_in(b, v) == 0) return gcd_recursive(content(a, v), b);

  Polynomial cont_a = content(a, v);
  Polynomial cont_b = content(b, v);
  Polynomial c = gcd_recursive(cont_a, cont_b);
  Polynomial u = poly_exact_divide(a, cont_a);
  Polynomial w = poly_exact_divide(b, cont_b);
  if (degree_in(u, v) < degree_in(w, v)) std::swap(u, w);

  // Primitive PRS.
  while (true) {
    Polynomial r = pseudo_remainder(u, w, v);
    if (r.is_zero()) break;
    if (degree_in(r, v) == 0) {
      // Coprime in v; only the content survives.
      return make_monic(c);
    }
    r = poly_exact_divide(r, content(r, v));
    u = std::move(w);
    w = std::move(r);
  }
  Polynomial pp = poly_exact_divide(w, content(w, v));
  return make_monic(c * pp);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  return gcd_recursive(a, b);
}

}  // namespace varjet
