#pragma once

// Brute-force reference implementations. Deliberately shares no code with
// the sgp library so that a bug there cannot leak into the reference.

#include <cstdint>
#include <vector>

namespace sgp::oracle {

using Int = std::int64_t;
using Set = std::vector<Int>;  // sorted ascending

/// Membership by exhaustive nonnegative combinations, memoized upward from 0.
class NaiveSemigroup {
 public:
  explicit NaiveSemigroup(std::vector<Int> gens);

  bool contains(Int x);
  /// (min gen - 1)(max gen - 1); every member at or above it is a member.
  Int schur_bound() const noexcept { return schur_; }
  Int genus();
  const std::vector<Int>& gens() const noexcept { return gens_; }

 private:
  std::vector<Int> gens_;
  std::vector<signed char> memo_;
  Int schur_ = 0;
};

bool naive_contains(const std::vector<Int>& gens, Int x);
Set naive_apery(const std::vector<Int>& gens, Int n);
Set naive_divisors(const std::vector<Int>& gens, Int x);
Set naive_divisors(const std::vector<Int>& gens, const Set& targets);

struct NaiveFr {
  Int value = 0;
  Set witness;             ///< lexicographically smallest minimizer
  bool certified = false;  ///< window >= value + 2g - 1
};

/// Minimum of |D(m_1..m_r)| over every r-subset of S ∩ [m, window].
/// value is -1 when the window holds fewer than r members.
NaiveFr naive_generalized_fr(const std::vector<Int>& gens, Int m, Int r, Int window);

}  // namespace sgp::oracle
