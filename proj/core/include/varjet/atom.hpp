#pragma once

#include "varjet/multi_index.hpp"

#include <compare>
#include <memory>
#include <string>
#include <variant>

namespace varjet {

class Expr;

/// Whitelisted transcendental heads. Calls are opaque atoms keyed by the
/// canonical form of their argument; no identities beyond that are applied.
enum class Fn { sin, cos, tan, exp, log, sqrt };

const char* fn_name(Fn fn);

/// A generator of the expression algebra: a base coordinate x_i, an
/// interior jet variable u^k_sigma, a boundary (normal) jet variable
/// (u_i^k)_tau, or an opaque function call. Whether a BaseCoord is an
/// interior or a boundary coordinate is decided by the context of the
/// expression holding it.
class Atom {
 public:
  struct BaseCoord {
    int axis;  // 1..n interior, 1..n-1 boundary
  };
  struct JetVar {
    int component;     // k in 1..m
    MultiIndex sigma;  // width n
  };
  struct NormalJetVar {
    int component;     // k in 1..m
    int normal_order;  // i >= 0
    MultiIndex tau;    // width n-1
  };
  struct FnCall {
    Fn fn;
    std::shared_ptr<const Expr> arg;
  };

  static Atom base_coord(int axis);
  static Atom jet_var(int component, MultiIndex sigma);
  static Atom normal_jet_var(int component, int normal_order, MultiIndex tau);
  static Atom fn_call(Fn fn, const Expr& arg);

  const BaseCoord* as_base_coord() const noexcept { return std::get_if<BaseCoord>(&node_); }
  const JetVar* as_jet_var() const noexcept { return std::get_if<JetVar>(&node_); }
  const NormalJetVar* as_normal_jet_var() const noexcept { return std::get_if<NormalJetVar>(&node_); }
  const FnCall* as_fn_call() const noexcept { return std::get_if<FnCall>(&node_); }

  bool operator==(const Atom& other) const { return compare(other) == std::strong_ordering::equal; }
  std::strong_ordering operator<=>(const Atom& other) const { return compare(other); }

  /// Fixed total order: BaseCoord < JetVar < NormalJetVar < FnCall;
  /// within a kind lexicographic on the defining data, FnCall by
  /// (name, canonical argument order).
  std::strong_ordering compare(const Atom& other) const;

  /// "x1", "u1_{2,3}", "u1", "ub1_2_{0}", "ub1_3", "sin(u1)".
  std::string to_string() const;

 private:
  explicit Atom(std::variant<BaseCoord, JetVar, NormalJetVar, FnCall> node)
      : node_(std::move(node)) {}

  std::variant<BaseCoord, JetVar, NormalJetVar, FnCall> node_;
};

}  // namespace varjet
