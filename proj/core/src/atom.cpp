#include "varjet/atom.hpp"

#include "varjet/errors.hpp"
#include "varjet/expr.hpp"

namespace varjet {

const char* fn_name(Fn fn) {
  switch (fn) {
    case Fn::sin: return "sin";
    case Fn::cos: return "cos";
    case Fn::tan: return "tan";
    case Fn::exp: return "exp";
    case Fn::log: return "log";
    case Fn::sqrt: return "sqrt";
  }
  return "?";
}

Atom Atom::base_coord(int axis) {
  if (axis < 1) throw IndexError("base coordinate axis must be >= 1");
  return Atom(BaseCoord{axis});
}

Atom Atom::jet_var(int component, MultiIndex sigma) {
  if (component < 1) throw IndexError("jet variable component must be >= 1");
  return Atom(JetVar{component, std::move(sigma)});
}

Atom Atom::normal_jet_var(int component, int normal_order, MultiIndex tau) {
  if (component < 1) throw IndexError("jet variable component must be >= 1");
  if (normal_order < 0) throw IndexError("normal order must be >= 0");
  return Atom(NormalJetVar{component, normal_order, std::move(tau)});
}

Atom Atom::fn_call(Fn fn, const Expr& arg) {
  return Atom(FnCall{fn, std::make_shared<const Expr>(arg)});
}

namespace {

int kind_rank(const Atom& a) {
  if (a.as_base_coord()) return 0;
  if (a.as_jet_var()) return 1;
  if (a.as_normal_jet_var()) return 2;
  return 3;
}

}  // namespace

std::strong_ordering Atom::compare(const Atom& other) const {
  if (auto c = kind_rank(*this) <=> kind_rank(other); c != 0) return c;
  if (const auto* b = as_base_coord()) {
    return b->axis <=> other.as_base_coord()->axis;
  }
  if (const auto* j = as_jet_var()) {
    const auto* o = other.as_jet_var();
    if (auto c = j->component <=> o->component; c != 0) return c;
    return j->sigma <=> o->sigma;
  }
  if (const auto* nj = as_normal_jet_var()) {
    const auto* o = other.as_normal_jet_var();
    if (auto c = nj->component <=> o->component; c != 0) return c;
    if (auto c = nj->tau <=> o->tau; c != 0) return c;
    return nj->normal_order <=> o->normal_order;
  }
  const auto* f = as_fn_call();
  const auto* o = other.as_fn_call();
  if (auto c = static_cast<int>(f->fn) <=> static_cast<int>(o->fn); c != 0) return c;
  return *f->arg <=> *o->arg;
}

std::string Atom::to_string() const {
  if (const auto* b = as_base_coord()) {
    return "x" + std::to_string(b->axis);
  }
  if (const auto* j = as_jet_var()) {
    std::string out = "u" + std::to_string(j->component);
    if (j->sigma.order() > 0) out += "_{" + j->sigma.to_string() + "}";
    return out;
  }
  if (const auto* nj = as_normal_jet_var()) {
    std::string out = "ub" + std::to_string(nj->component) + "_" + std::to_string(nj->normal_order);
    if (nj->tau.order() > 0) out += "_{" + nj->tau.to_string() + "}";
    return out;
  }
  const auto* f = as_fn_call();
  return std::string(fn_name(f->fn)) + "(" + f->arg->to_string() + ")";
}

}  // namespace varjet
