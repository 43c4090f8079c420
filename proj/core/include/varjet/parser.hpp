#pragma once

#include "varjet/expr.hpp"

#include <string_view>
#include <vector>

namespace varjet {

/// Raw expression tree as read from text, before canonicalization.
///
/// Grammar (printing emits exactly this, with canonical ordering):
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' int)?
///   base   := number | atom | fn '(' expr ')' | '(' expr ')'
/// Atoms: x<i>; u<k>_{s1,...,sn}; ub<k>_<i>_{t1,...,t(n-1)}. Braces may be
/// omitted for an all-zero multi-index ("u1", "ub1_3").
struct Ast {
  enum class Kind {
    number,
    base_coord,
    jet_var,
    normal_jet_var,
    fn_call,
    add,
    sub,
    mul,
    div,
    pow,
    neg,
  };

  Kind kind{};
  Rational value{};        // number
  int index = 0;           // base_coord axis, or component k of a jet variable
  int normal_order = 0;    // normal_jet_var i
  MultiIndex multi{};      // sigma / tau
  Fn fn{};                 // fn_call
  int exponent = 0;        // pow
  std::vector<Ast> children;

  static Ast number(Rational v);
  static Ast base_coord(int axis);
  static Ast jet_var(int component, MultiIndex sigma);
  static Ast normal_jet_var(int component, int normal_order, MultiIndex tau);
  static Ast fn_call(Fn fn, Ast arg);
  static Ast binary(Kind kind, Ast lhs, Ast rhs);
  static Ast neg(Ast operand);
  static Ast pow(Ast base, int exponent);
};

/// Text -> raw tree. Throws ParseError (with position) on syntax errors,
/// out-of-range indices, wrong-width multi-indices, and wrong-world atoms.
Ast parse_tree(std::string_view text, const Context& ctx);

/// Raw tree -> canonical Expr. Validates index ranges and world purity;
/// idempotent (normalizing a canonical value is the identity) and sound
/// (numeric probes of input and output agree). Throws DivideByZeroError
/// when a denominator normalizes to the zero polynomial.
Expr normalize(const Ast& tree, const Context& ctx);

/// parse = normalize . parse_tree.
Expr parse(std::string_view text, const Context& ctx);

}  // namespace varjet
