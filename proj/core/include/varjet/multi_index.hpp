#pragma once

#include <compare>
#include <string>
#include <vector>

namespace varjet {

/// Element of N_0^w: the jet multi-index sigma (width n) or its boundary
/// counterpart tau (width n-1). Width is fixed at construction; all
/// entry-level arithmetic preserves it.
class MultiIndex {
 public:
  /// Width-0 index (the only multi-index on a point; legal when n = 1 on
  /// the boundary).
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zero(int width);
  /// Standard basis element 1_axis, axis in 1..width.
  static MultiIndex unit(int width, int axis);

  int width() const noexcept { return static_cast<int>(entries_.size()); }
  /// |sigma|.
  int order() const noexcept;
  /// Entry along a 1-based axis.
  int at(int axis) const;
  const std::vector<int>& entries() const noexcept { return entries_; }

  /// sigma + 1_axis.
  MultiIndex plus(int axis) const;
  /// sigma - 1_axis; throws IndexError if the entry would go negative.
  MultiIndex minus(int axis) const;

  bool operator==(const MultiIndex&) const = default;
  std::strong_ordering operator<=>(const MultiIndex& other) const;

  /// "2,0,1" (empty string for width 0).
  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

}  // namespace varjet
