#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgp/int_set.hpp"
#include "sgp/semigroup.hpp"

namespace sgp {

/// n = u*a + v*b with 0 <= u < b. Unique for every integer n.
struct UVRep {
  Int u = 0;
  Int v = 0;
  friend bool operator==(const UVRep&, const UVRep&) = default;
};

/// n = (i*a mod b) + h*a with i*a mod b < a, for n >= 0.
struct IHRep {
  Int i = 0;
  Int h = 0;
  friend bool operator==(const IHRep&, const IHRep&) = default;
};

/// Interval {mbar (+) start, ..., mbar (+) (start + span)} of the ground,
/// where mbar (+) j = mbar + (j*a mod b). Indices are taken mod b, so an
/// interval may wrap past b - 1. The whole ground is normalized to (0, b - 1).
struct GroundInterval {
  Int start = 0;
  Int span = 0;
  friend bool operator==(const GroundInterval&, const GroundInterval&) = default;
};

/// The three ways of moving a triangle handled by delta_divisors.
struct Middle {
  Int n2 = 0;  ///< insert mbar + n2 between mbar + n1 and mbar + n3
};
struct Extend {
  Int k = 0;  ///< replace mbar + n1 by mbar + n1 + k*a
};
struct Multiple {
  Int k = 0;  ///< replace mbar + n1 by mbar + k*a
};
using DivisorChange = std::variant<Middle, Extend, Multiple>;

/// S = <a, b> with 2 <= a < b coprime.
///
/// All operations taking `mbar` require mbar >= 2c - 1 and raise
/// Errc::MbarTooSmall otherwise. Returned sets are sorted ascending.
class Dim2Semigroup {
 public:
  static Dim2Semigroup make(Int a, Int b);
  /// View of a general semigroup whose embedding dimension is two.
  static Dim2Semigroup from(const NumericalSemigroup& s);

  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }
  /// a^{-1} mod b, in [1, b).
  Int a_inverse() const noexcept { return a_inv_; }
  Int conductor() const noexcept { return a_ * b_ - a_ - b_ + 1; }
  Int genus() const noexcept { return (a_ - 1) * (b_ - 1) / 2; }
  const NumericalSemigroup& base() const noexcept { return base_; }

  UVRep uv_rep(Int n) const noexcept;
  IHRep ih_rep(Int n) const;

  /// Membership through the sign of v.
  bool contains_uv(Int n) const noexcept { return uv_rep(n).v >= 0; }

  /// Ap(S, n) from the two-rectangle description.
  IntSet apery_closed(Int n) const;

  /// D(mbar + n) \ D(mbar) as explicit rectangles in (x, y) coordinates.
  IntSet new_divisors(Int mbar, Int n) const;

  Int ground_elem(Int mbar, Int i) const;

  /// D(mbar (+) i) \ D(mbar) for 0 <= i < b.
  IntSet ground_divisors(Int mbar, Int i) const;

  /// Base D(mbar + n) ∩ [mbar, mbar + b) of the triangle with upper vertex n.
  GroundInterval triangle_base(Int mbar, Int n) const;

  IntSet interval_elements(Int mbar, const GroundInterval& interval) const;
  /// Ground indices (in [0, b)) covered by the interval, ascending.
  std::vector<Int> interval_indices(const GroundInterval& interval) const;

  bool is_whole_ground(const GroundInterval& interval) const noexcept {
    return interval.span >= b_ - 1;
  }
  bool is_amenable_interval(const GroundInterval& interval) const noexcept;

  /// The order L < L' on amenable intervals: L ∪ L' is not an amenable
  /// interval, and either mbar ∈ L, or mbar ∉ L ∪ L' and every index of L
  /// is below every index of L'.
  bool precedes(const GroundInterval& lhs, const GroundInterval& rhs) const;

  /// n' divides n in S, decided by comparing triangle bases only.
  /// Raises Errc::BaseIsWholeGround when the base of n is the whole ground.
  bool divides_via_bases(Int mbar, Int n_prime, Int n) const;

  /// New divisors produced by one triangle move, as a closed rectangle:
  ///   Middle(n2):  D(mbar+n1, mbar+n2, mbar+n3) \ D(mbar+n1, mbar+n3)
  ///   Extend(k):   D(mbar+n1+ka, mbar+n3)     \ D(mbar+n1, mbar+n3)
  ///   Multiple(k): D(mbar+ka, mbar+n3)        \ D(mbar+n1, mbar+n3)
  /// Without n3 the lower y-bound v3 becomes v1 - a and mbar + n3 is dropped
  /// from both sides. Hypotheses checked: mbar ∈ L1, L1 ≺ L2 ≺ L3 between neighbours,
  /// and for an interval holding mbar only disjointness from L3 (L3 may wrap
  /// round next to mbar); a failure
  /// raises Errc::HypothesisViolated naming the condition.
  IntSet delta_divisors(Int mbar, Int n1, std::optional<Int> n3, const DivisorChange& change) const;

  /// { mbar + x*a + y*b : x_lo < x <= x_hi, y_lo < y <= y_hi }.
  IntSet rectangle(Int mbar, Int x_lo, Int x_hi, Int y_lo, Int y_hi) const;

 private:
  Dim2Semigroup(Int a, Int b, Int a_inv, NumericalSemigroup base)
      : a_(a), b_(b), a_inv_(a_inv), base_(std::move(base)) {}

  void require_mbar(Int mbar) const;
  std::vector<char> index_mask(const GroundInterval& interval) const;
  bool union_is_amenable_interval(const GroundInterval& lhs, const GroundInterval& rhs) const;
  void require_precedes(const GroundInterval& lhs, const GroundInterval& rhs,
                        const std::string& name) const;
  void require_before_last(const GroundInterval& lhs, const GroundInterval& last,
                           const std::string& name) const;
  void require_disjoint(const GroundInterval& lhs, const GroundInterval& rhs,
                        const std::string& name) const;

  Int a_;
  Int b_;
  Int a_inv_;
  NumericalSemigroup base_;
};

}  // namespace sgp
