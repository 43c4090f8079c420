#pragma once

#include "varjet/atom.hpp"
#include "varjet/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace varjet {

/// Product of positive atom powers, kept sorted by the atom order.
/// The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<Atom, int>> factors);

  static Monomial atom(Atom a, int exponent = 1);

  bool is_one() const noexcept { return factors_.empty(); }
  int total_degree() const noexcept;
  int degree_in(const Atom& v) const noexcept;
  const std::vector<std::pair<Atom, int>>& factors() const noexcept { return factors_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  /// other / this, entries assumed divisible.
  Monomial divide(const Monomial& divisor) const;

  bool operator==(const Monomial& other) const { return compare(other) == std::strong_ordering::equal; }
  std::strong_ordering operator<=>(const Monomial& other) const { return compare(other); }

  /// A genuine monomial order (multiplicative, 1 minimal): lexicographic
  /// on exponent vectors with atoms in ascending order as significance.
  std::strong_ordering compare(const Monomial& other) const noexcept;

 private:
  std::vector<std::pair<Atom, int>> factors_;
};

/// Rational-coefficient sum of monomials in canonical form: like terms
/// merged, zero coefficients absent. The default value is the zero
/// polynomial.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Rational c);
  static Polynomial one() { return constant(1); }
  static Polynomial atom(Atom a);
  static Polynomial term(Rational c, Monomial mono);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// The value when the polynomial is a constant (including 0).
  std::optional<Rational> as_constant() const;
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  int term_count() const noexcept { return static_cast<int>(terms_.size()); }

  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(int exponent) const;  // exponent >= 0

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
  std::strong_ordering operator<=>(const Polynomial& other) const;

  void add_term(const Monomial& mono, const Rational& c);

 private:
  std::map<Monomial, Rational> terms_;
};

/// Monic gcd over Q in the occurring atoms (all atoms treated as
/// independent variables). gcd(0, p) is the monic normalization of p;
/// constants are units, so any nonzero constant input gives 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Exact quotient; throws Error if the division does not come out even.
Polynomial poly_exact_divide(const Polynomial& numerator, const Polynomial& divisor);

}  // namespace varjet
