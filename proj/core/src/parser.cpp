#include "varjet/parser.hpp"

#include "varjet/errors.hpp"

#include <cctype>
#include <optional>

namespace varjet {

Ast Ast::number(Rational v) {
  Ast a;
  a.kind = Kind::number;
  a.value = std::move(v);
  return a;
}

Ast Ast::base_coord(int axis) {
  Ast a;
  a.kind = Kind::base_coord;
  a.index = axis;
  return a;
}

Ast Ast::jet_var(int component, MultiIndex sigma) {
  Ast a;
  a.kind = Kind::jet_var;
  a.index = component;
  a.multi = std::move(sigma);
  return a;
}

Ast Ast::normal_jet_var(int component, int normal_order, MultiIndex tau) {
  Ast a;
  a.kind = Kind::normal_jet_var;
  a.index = component;
  a.normal_order = normal_order;
  a.multi = std::move(tau);
  return a;
}

Ast Ast::fn_call(Fn fn, Ast arg) {
  Ast a;
  a.kind = Kind::fn_call;
  a.fn = fn;
  a.children.push_back(std::move(arg));
  return a;
}

Ast Ast::binary(Kind kind, Ast lhs, Ast rhs) {
  Ast a;
  a.kind = kind;
  a.children.push_back(std::move(lhs));
  a.children.push_back(std::move(rhs));
  return a;
}

Ast Ast::neg(Ast operand) {
  Ast a;
  a.kind = Kind::neg;
  a.children.push_back(std::move(operand));
  return a;
}

Ast Ast::pow(Ast base, int exponent) {
  Ast a;
  a.kind = Kind::pow;
  a.exponent = exponent;
  a.children.push_back(std::move(base));
  return a;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Context& ctx) : text_(text), ctx_(ctx) {}

  Ast run() {
    Ast e = parse_expr();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  const Context& ctx_;

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "' " + what);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  Ast parse_expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = get() == '-';
    }
    Ast node = parse_term();
    if (negate) node = Ast::neg(std::move(node));
    while (true) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        char op = get();
        Ast rhs = parse_term();
        node = Ast::binary(op == '+' ? Ast::Kind::add : Ast::Kind::sub, std::move(node),
                           std::move(rhs));
      } else {
        break;
      }
    }
    return node;
  }

  Ast parse_term() {
    Ast node = parse_factor();
    while (true) {
      skip_ws();
      if (peek() == '*' || peek() == '/') {
        char op = get();
        Ast rhs = parse_factor();
        node = Ast::binary(op == '*' ? Ast::Kind::mul : Ast::Kind::div, std::move(node),
                           std::move(rhs));
      } else {
        break;
      }
    }
    return node;
  }

  Ast parse_factor() {
    Ast base = parse_base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
      }
      int e = parse_uint("exponent");
      return Ast::pow(std::move(base), negative ? -e : e);
    }
    return base;
  }

  Ast parse_base() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    if (c == '(') {
      ++pos_;
      Ast inner = parse_expr();
      expect(')', "to close the parenthesized expression");
      return inner;
    }
    fail("expected a number, a variable, a function call, or '('");
  }

  int parse_uint(const char* what) {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(std::string("expected ") + what);
    }
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1'000'000) fail(std::string(what) + " is unreasonably large");
    }
    return static_cast<int>(v);
  }

  Ast parse_number() {
    Integer int_part = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      int_part = int_part * 10 + (get() - '0');
    }
    if (peek() == '.') {
      ++pos_;
      Integer frac = 0;
      Integer scale = 1;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected digits after the decimal point");
      }
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        frac = frac * 10 + (get() - '0');
        scale *= 10;
      }
      return Ast::number(Rational(int_part) + Rational(frac, scale));
    }
    return Ast::number(Rational(int_part));
  }

  Ast parse_name() {
    const std::size_t start = pos_;
    std::string name;
    while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) name += get();

    if (name == "x") {
      const std::size_t axis_pos = pos_;
      int axis = parse_uint("base coordinate index");
      if (axis < 1 || axis > ctx_.base_dim()) {
        throw ParseError("base coordinate x" + std::to_string(axis) + " out of range 1.." +
                             std::to_string(ctx_.base_dim()) + " in the " +
                             world_name(ctx_.world) + " world",
                         axis_pos);
      }
      return Ast::base_coord(axis);
    }
    if (name == "u") {
      if (ctx_.world != World::interior) {
        throw ParseError("interior jet variable in a boundary-world expression", start);
      }
      int k = parse_component();
      MultiIndex sigma = parse_optional_multi(ctx_.n);
      return Ast::jet_var(k, std::move(sigma));
    }
    if (name == "ub") {
      if (ctx_.world != World::boundary) {
        throw ParseError("boundary jet variable in an interior-world expression", start);
      }
      int k = parse_component();
      expect('_', "before the normal order of a boundary jet variable");
      int i = parse_uint("normal order");
      MultiIndex tau = parse_optional_multi(ctx_.n - 1);
      return Ast::normal_jet_var(k, i, std::move(tau));
    }
    for (Fn fn : {Fn::sin, Fn::cos, Fn::tan, Fn::exp, Fn::log, Fn::sqrt}) {
      if (name == fn_name(fn)) {
        expect('(', "after the function name");
        Ast arg = parse_expr();
        expect(')', "to close the function call");
        return Ast::fn_call(fn, std::move(arg));
      }
    }
    throw ParseError("unknown name '" + name + "'", start);
  }

  int parse_component() {
    const std::size_t at = pos_;
    int k = parse_uint("jet variable component");
    if (k < 1 || k > ctx_.m) {
      throw ParseError("jet variable component " + std::to_string(k) + " out of range 1.." +
                           std::to_string(ctx_.m),
                       at);
    }
    return k;
  }

  /// "_{a,b,...}" with exactly `width` entries, or nothing (all-zero index).
  MultiIndex parse_optional_multi(int width) {
    const std::size_t save = pos_;
    skip_ws();
    if (peek() != '_') return MultiIndex::zero(width);
    ++pos_;
    skip_ws();
    if (peek() != '{') {
      // Not a multi-index opener; leave the underscore for the caller's
      // grammar (there is none here, so this is an error).
      pos_ = save;
      fail("expected '{' after '_' in a jet variable");
    }
    ++pos_;
    std::vector<int> entries;
    if (!accept('}')) {
      while (true) {
        entries.push_back(parse_uint("multi-index entry"));
        skip_ws();
        if (accept(',')) continue;
        expect('}', "to close the multi-index");
        break;
      }
    }
    if (static_cast<int>(entries.size()) != width) {
      throw ParseError("multi-index has " + std::to_string(entries.size()) +
                           " entries, expected " + std::to_string(width),
                       save);
    }
    return MultiIndex(std::move(entries));
  }
};

}  // namespace

Ast parse_tree(std::string_view text, const Context& ctx) {
  return Parser(text, ctx).run();
}

Expr normalize(const Ast& tree, const Context& ctx) {
  switch (tree.kind) {
    case Ast::Kind::number:
      return Expr::constant(ctx, tree.value);
    case Ast::Kind::base_coord:
      return Expr::base_coord(ctx, tree.index);
    case Ast::Kind::jet_var:
      return Expr::jet_var(ctx, tree.index, tree.multi);
    case Ast::Kind::normal_jet_var:
      return Expr::normal_jet_var(ctx, tree.index, tree.normal_order, tree.multi);
    case Ast::Kind::fn_call:
      return Expr::fn_call(tree.fn, normalize(tree.children.at(0), ctx));
    case Ast::Kind::add:
      return normalize(tree.children.at(0), ctx) + normalize(tree.children.at(1), ctx);
    case Ast::Kind::sub:
      return normalize(tree.children.at(0), ctx) - normalize(tree.children.at(1), ctx);
    case Ast::Kind::mul:
      return normalize(tree.children.at(0), ctx) * normalize(tree.children.at(1), ctx);
    case Ast::Kind::div:
      return normalize(tree.children.at(0), ctx) / normalize(tree.children.at(1), ctx);
    case Ast::Kind::pow:
      return pow(normalize(tree.children.at(0), ctx), tree.exponent);
    case Ast::Kind::neg:
      return -normalize(tree.children.at(0), ctx);
  }
  throw Error("malformed expression tree");
}

Expr parse(std::string_view text, const Context& ctx) {
  return normalize(parse_tree(text, ctx), ctx);
}

}  // namespace varjet
