#include "varjet/horizontal_form.hpp"

#include "varjet/errors.hpp"

namespace varjet {

HorizontalForm::HorizontalForm(const Context& ctx, int degree) : ctx_(ctx), degree_(degree) {
  if (degree < 0 || degree > ctx.base_dim()) {
    throw IndexError("form degree " + std::to_string(degree) + " out of range 0.." +
                     std::to_string(ctx.base_dim()));
  }
}

HorizontalForm HorizontalForm::scalar(Expr f) {
  HorizontalForm out(f.context(), 0);
  out.add_term({}, std::move(f));
  return out;
}

HorizontalForm& HorizontalForm::add_term(std::vector<int> axes, Expr c) {
  if (static_cast<int>(axes.size()) != degree_) {
    throw IndexError("basis subset size " + std::to_string(axes.size()) +
                     " does not match form degree " + std::to_string(degree_));
  }
  int prev = 0;
  for (int a : axes) {
    if (a <= prev || a > ctx_.base_dim()) {
      throw IndexError("basis subset must be strictly increasing within 1.." +
                       std::to_string(ctx_.base_dim()));
    }
    prev = a;
  }
  if (c.context() != ctx_) throw WorldError("form coefficient context mismatch");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(std::move(axes), c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Expr HorizontalForm::coefficient(const std::vector<int>& axes) const {
  auto it = terms_.find(axes);
  return it == terms_.end() ? Expr::zero(ctx_) : it->second;
}

HorizontalForm HorizontalForm::operator+(const HorizontalForm& other) const {
  if (ctx_ != other.ctx_ || degree_ != other.degree_) {
    throw WorldError("adding horizontal forms of different type");
  }
  HorizontalForm out = *this;
  for (const auto& [axes, c] : other.terms_) out.add_term(axes, c);
  return out;
}

HorizontalForm HorizontalForm::operator-() const {
  HorizontalForm out(ctx_, degree_);
  for (const auto& [axes, c] : terms_) out.terms_.emplace(axes, -c);
  return out;
}

bool HorizontalForm::operator==(const HorizontalForm& other) const {
  return ctx_ == other.ctx_ && degree_ == other.degree_ && terms_ == other.terms_;
}

std::string HorizontalForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [axes, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (!axes.empty()) {
      out += " dx[";
      for (std::size_t i = 0; i < axes.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(axes[i]);
      }
      out += "]";
    }
  }
  return out;
}

}  // namespace varjet
