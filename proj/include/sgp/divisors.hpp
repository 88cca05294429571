#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "sgp/int_set.hpp"
#include "sgp/semigroup.hpp"

namespace sgp {

/// D(M) = union of S ∩ (x - S) over the targets x in M.
struct DivisorSet {
  IntSet targets;
  IntSet elements;

  Int size() const noexcept { return static_cast<Int>(elements.size()); }
  bool contains(Int x) const { return set_contains(elements, x); }
};

DivisorSet div_set(const NumericalSemigroup& s, Int x);
DivisorSet div_set_multi(const NumericalSemigroup& s, std::span<const Int> targets);
inline DivisorSet div_set_multi(const NumericalSemigroup& s, std::initializer_list<Int> targets) {
  return div_set_multi(s, std::span<const Int>(targets.begin(), targets.size()));
}

/// Raises Errc::MbarTooSmall unless mbar >= 2c - 1.
void require_mbar(const NumericalSemigroup& s, Int mbar);

/// D(mbar + n) \ D(mbar) as the image of Ap(S, n) under s -> mbar + n - s.
IntSet new_divisors_via_apery(const NumericalSemigroup& s, Int mbar, Int n);

/// D(mbar + n) \ D(mbar) = Ap(S, n) + mbar - F for symmetric S.
IntSet symmetric_shift_divisors(const NumericalSemigroup& s, Int mbar, Int n);

}  // namespace sgp
