#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "sgp/error.hpp"
#include "sgp/int_set.hpp"

namespace sgp {

/// Upper bound on the sieve length accepted by from_generators. Inputs whose
/// conductor could exceed it are rejected with Errc::ResourceLimit.
inline constexpr Int kMaxSieveLength = 50'000'000;

/// A numerical semigroup given by a finite generating set with gcd 1.
///
/// Membership is a dense table over [0, c + max generator); every integer at
/// or above the conductor is a member, every negative integer is not.
/// Instances are immutable after construction.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::span<const Int> generators);
  static NumericalSemigroup from_generators(std::initializer_list<Int> generators) {
    return from_generators(std::span<const Int>(generators.begin(), generators.size()));
  }

  /// Generators as given, sorted and deduplicated.
  const std::vector<Int>& generators() const noexcept { return generators_; }
  /// Irreducible elements; they generate the same semigroup.
  const std::vector<Int>& minimal_generators() const noexcept { return minimal_; }

  Int genus() const noexcept { return genus_; }
  Int conductor() const noexcept { return conductor_; }
  /// Largest gap, -1 for the trivial semigroup.
  Int frobenius() const noexcept { return conductor_ - 1; }
  Int multiplicity() const noexcept { return multiplicity_; }
  Int embedding_dimension() const noexcept { return static_cast<Int>(minimal_.size()); }
  Int max_generator() const noexcept { return generators_.back(); }

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x >= static_cast<Int>(member_.size())) return true;
    return member_[static_cast<std::size_t>(x)] != 0;
  }

  /// k-th smallest element, rho(1) = 0.
  Int rho(Int k) const;

  /// Position of a member x in the increasing enumeration (inverse of rho).
  Int rank(Int x) const;

  IntSet gaps() const;

  /// Members in the closed window [lo, hi].
  IntSet elements_in(Int lo, Int hi) const;

  /// Ap(S, n) = { s in S : s - n not in S } for any integer n.
  IntSet apery(Int n) const;

  bool is_symmetric() const;

 private:
  NumericalSemigroup() = default;

  std::vector<Int> generators_;
  std::vector<Int> minimal_;
  std::vector<char> member_;
  IntSet small_elements_;  // members below the conductor
  Int genus_ = 0;
  Int conductor_ = 0;
  Int multiplicity_ = 1;
};

}  // namespace sgp
