#include "sgp/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sgp {

namespace {

std::string join(std::span<const Int> values) {
  std::string out;
  for (Int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> generators) {
  if (generators.empty()) throw Error(Errc::EmptyInput, "no generators given");
  for (Int g : generators) {
    if (g < 1) throw Error(Errc::InvalidArgument, "generators must be positive, got " + join(generators));
  }

  NumericalSemigroup s;
  s.generators_.assign(generators.begin(), generators.end());
  s.generators_ = normalized(std::move(s.generators_));

  Int d = 0;
  for (Int g : s.generators_) d = std::gcd(d, g);
  if (d != 1) throw Error(Errc::GcdNotOne, "gcd(" + join(s.generators_) + ") = " + std::to_string(d));

  const Int smallest = s.generators_.front();
  const Int largest = s.generators_.back();
  // Schur: c <= (smallest - 1)(largest - 1).
  if (smallest > 1 && (largest - 1) > (kMaxSieveLength - largest) / (smallest - 1)) {
    throw Error(Errc::ResourceLimit,
                "conductor bound for <" + join(s.generators_) + "> exceeds the sieve limit");
  }

  // x is a member iff x = 0 or x - g is a member for some generator g. The
  // conductor starts the first run of `largest` consecutive members.
  std::vector<char>& member = s.member_;
  member.push_back(1);
  Int run = 1;
  Int x = 0;
  while (run < largest) {
    ++x;
    bool in = false;
    for (Int g : s.generators_) {
      if (g > x) break;
      if (member[static_cast<std::size_t>(x - g)]) {
        in = true;
        break;
      }
    }
    member.push_back(in ? 1 : 0);
    run = in ? run + 1 : 0;
  }
  s.conductor_ = x - largest + 1;
  // member_ now covers [0, c + largest).

  for (Int y = 0; y < s.conductor_; ++y) {
    if (member[static_cast<std::size_t>(y)]) s.small_elements_.push_back(y);
  }
  s.genus_ = s.conductor_ - static_cast<Int>(s.small_elements_.size());

  for (Int g : s.generators_) {
    bool reducible = false;
    for (Int t = 1; t < g && !reducible; ++t) reducible = s.contains(t) && s.contains(g - t);
    if (!reducible) s.minimal_.push_back(g);
  }
  s.multiplicity_ = s.minimal_.front();
  return s;
}

Int NumericalSemigroup::rho(Int k) const {
  if (k < 1) throw Error(Errc::InvalidArgument, "rho index must be >= 1, got " + std::to_string(k));
  const Int below = static_cast<Int>(small_elements_.size());
  if (k > below) return k + genus_ - 1;
  return small_elements_[static_cast<std::size_t>(k - 1)];
}

Int NumericalSemigroup::rank(Int x) const {
  if (!contains(x)) throw Error(Errc::NotInSemigroup, std::to_string(x) + " is not a member");
  if (x >= conductor_) return x + 1 - genus_;
  auto it = std::lower_bound(small_elements_.begin(), small_elements_.end(), x);
  return static_cast<Int>(it - small_elements_.begin()) + 1;
}

IntSet NumericalSemigroup::gaps() const {
  IntSet out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Int y = 1; y < conductor_; ++y) {
    if (!contains(y)) out.push_back(y);
  }
  return out;
}

IntSet NumericalSemigroup::elements_in(Int lo, Int hi) const {
  IntSet out;
  for (Int y = std::max<Int>(lo, 0); y <= hi; ++y) {
    if (contains(y)) out.push_back(y);
  }
  return out;
}

IntSet NumericalSemigroup::apery(Int n) const {
  // If s >= c and s - n >= c then s - n is a member, so s is not in Ap(S, n);
  // every element of Ap(S, n) therefore lies below max(c, c - n) + |n|.
  const Int limit = std::max(conductor_, conductor_ - n) + (n < 0 ? -n : n);
  IntSet out;
  for (Int s = 0; s <= limit; ++s) {
    if (contains(s) && !contains(s - n)) out.push_back(s);
  }
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  for (Int r = 0; r < conductor_; ++r) {
    if (contains(r) == contains(conductor_ - 1 - r)) return false;
  }
  return true;
}

}  // namespace sgp
