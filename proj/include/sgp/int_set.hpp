#pragma once

#include <algorithm>
#include <iterator>
#include <vector>

#include "sgp/error.hpp"

namespace sgp {

/// Sorted, duplicate-free list of integers. All set-valued results use it.
using IntSet = std::vector<Int>;

inline IntSet normalized(IntSet values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

inline IntSet set_union(const IntSet& lhs, const IntSet& rhs) {
  IntSet out;
  out.reserve(lhs.size() + rhs.size());
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return out;
}

inline IntSet set_difference(const IntSet& lhs, const IntSet& rhs) {
  IntSet out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return out;
}

inline IntSet set_intersection(const IntSet& lhs, const IntSet& rhs) {
  IntSet out;
  std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(out));
  return out;
}

inline bool is_subset(const IntSet& sub, const IntSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

/// Elements of `values` lying in the half-open window [lo, hi).
inline IntSet restrict_to(const IntSet& values, Int lo, Int hi) {
  auto first = std::lower_bound(values.begin(), values.end(), lo);
  auto last = std::lower_bound(first, values.end(), hi);
  return IntSet(first, last);
}

inline bool set_contains(const IntSet& values, Int x) {
  return std::binary_search(values.begin(), values.end(), x);
}

}  // namespace sgp
