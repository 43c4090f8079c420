#include "varjet/multi_index.hpp"

#include "varjet/errors.hpp"

#include <numeric>

namespace varjet {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw IndexError("multi-index entries must be non-negative");
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zero(int width) {
  if (width < 0) throw IndexError("multi-index width must be non-negative");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(width), 0));
}

MultiIndex MultiIndex::unit(int width, int axis) {
  MultiIndex mi = zero(width);
  return mi.plus(axis);
}

int MultiIndex::order() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int MultiIndex::at(int axis) const {
  if (axis < 1 || axis > width()) {
    throw IndexError("multi-index axis " + std::to_string(axis) + " out of range 1.." +
                     std::to_string(width()));
  }
  return entries_[static_cast<std::size_t>(axis - 1)];
}

MultiIndex MultiIndex::plus(int axis) const {
  if (axis < 1 || axis > width()) {
    throw IndexError("multi-index axis " + std::to_string(axis) + " out of range 1.." +
                     std::to_string(width()));
  }
  MultiIndex out = *this;
  ++out.entries_[static_cast<std::size_t>(axis - 1)];
  return out;
}

MultiIndex MultiIndex::minus(int axis) const {
  if (axis < 1 || axis > width()) {
    throw IndexError("multi-index axis " + std::to_string(axis) + " out of range 1.." +
                     std::to_string(width()));
  }
  if (entries_[static_cast<std::size_t>(axis - 1)] == 0) {
    throw IndexError("multi-index entry along axis " + std::to_string(axis) +
                     " would become negative");
  }
  MultiIndex out = *this;
  --out.entries_[static_cast<std::size_t>(axis - 1)];
  return out;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = width() <=> other.width(); c != 0) return c;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (auto c = entries_[i] <=> other.entries_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out;
}

}  // namespace varjet
