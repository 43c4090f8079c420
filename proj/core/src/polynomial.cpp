#include "varjet/polynomial.hpp"

#include "varjet/errors.hpp"

#include <algorithm>

namespace varjet {

Monomial::Monomial(std::vector<std::pair<Atom, int>> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge repeated atoms, drop zero exponents.
  std::vector<std::pair<Atom, int>> merged;
  merged.reserve(factors_.size());
  for (auto& [atom, exp] : factors_) {
    if (!merged.empty() && merged.back().first == atom) {
      merged.back().second += exp;
    } else {
      merged.push_back({atom, exp});
    }
  }
  std::erase_if(merged, [](const auto& f) { return f.second == 0; });
  for (const auto& [atom, exp] : merged) {
    if (exp < 0) throw IndexError("monomial exponents must be positive");
  }
  factors_ = std::move(merged);
}

Monomial Monomial::atom(Atom a, int exponent) {
  return Monomial(std::vector<std::pair<Atom, int>>{{std::move(a), exponent}});
}

int Monomial::total_degree() const noexcept {
  int d = 0;
  for (const auto& [atom, exp] : factors_) d += exp;
  return d;
}

int Monomial::degree_in(const Atom& v) const noexcept {
  for (const auto& [atom, exp] : factors_) {
    if (atom == v) return exp;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    auto c = i->first <=> j->first;
    if (c < 0) {
      out.factors_.push_back(*i++);
    } else if (c > 0) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back({i->first, i->second + j->second});
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, factors_.end());
  out.factors_.insert(out.factors_.end(), j, other.factors_.end());
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end()) {
    while (j != other.factors_.end() && j->first < i->first) ++j;
    if (j == other.factors_.end() || !(j->first == i->first) || j->second < i->second) {
      return false;
    }
    ++i;
  }
  return true;
}

Monomial Monomial::divide(const Monomial& divisor) const {
  Monomial out;
  auto j = divisor.factors_.begin();
  for (const auto& [atom, exp] : factors_) {
    int e = exp;
    if (j != divisor.factors_.end() && j->first == atom) {
      e -= j->second;
      ++j;
    }
    if (e < 0 || (j != divisor.factors_.end() && j->first < atom)) {
      throw Error("monomial division is not exact");
    }
    if (e > 0) out.factors_.push_back({atom, e});
  }
  if (j != divisor.factors_.end()) throw Error("monomial division is not exact");
  return out;
}

std::strong_ordering Monomial::compare(const Monomial& other) const noexcept {
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    auto c = i->first <=> j->first;
    // The side holding a positive power of the smaller atom wins.
    if (c < 0) return std::strong_ordering::greater;
    if (c > 0) return std::strong_ordering::less;
    if (auto e = i->second <=> j->second; e != 0) return e;
    ++i;
    ++j;
  }
  if (i != factors_.end()) return std::strong_ordering::greater;
  if (j != other.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(Rational c) {
  Polynomial p;
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::atom(Atom a) {
  Polynomial p;
  p.add_term(Monomial::atom(std::move(a)), 1);
  return p;
}

Polynomial Polynomial::term(Rational c, Monomial mono) {
  Polynomial p;
  p.add_term(mono, c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("the zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error("the zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [mono, c] : other.terms_) out.add_term(mono, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [mono, c] : other.terms_) out.add_term(mono, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) {
      out.add_term(m1 * m2, c1 * c2);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [mono, coef] : terms_) out.terms_.emplace(mono, coef * c);
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw Error("polynomial power must be non-negative");
  Polynomial acc = one();
  for (int i = 0; i < exponent; ++i) acc = acc * *this;
  return acc;
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& other) const {
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() && j != other.terms_.end()) {
    if (auto c = i->first <=> j->first; c != 0) return c;
    if (auto c = i->second.compare(j->second); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    ++i;
    ++j;
  }
  if (i != terms_.end()) return std::strong_ordering::greater;
  if (j != other.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Polynomial poly_exact_divide(const Polynomial& numerator, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DivideByZeroError("exact division by the zero polynomial");
  Polynomial remainder = numerator;
  Polynomial quotient;
  const Monomial& lead_m = divisor.leading_monomial();
  const Rational& lead_c = divisor.leading_coefficient();
  while (!remainder.is_zero()) {
    const Monomial& rm = remainder.leading_monomial();
    const Rational& rc = remainder.leading_coefficient();
    if (!lead_m.divides(rm)) throw Error("polynomial division is not exact");
    Monomial qm = rm.divide(lead_m);
    Rational qc = rc / lead_c;
    quotient.add_term(qm, qc);
    remainder = remainder - divisor * Polynomial::term(qc, qm);
  }
  return quotient;
}

}  // namespace varjet
