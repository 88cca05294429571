#include "sgp/dim2.hpp"

#include <numeric>

namespace sgp {

namespace {

Int floor_mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Int floor_div(Int x, Int m) { return (x - floor_mod(x, m)) / m; }

Int mod_inverse(Int a, Int m) {
  Int old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return floor_mod(old_s, m);
}

void require_nonnegative(Int n, const char* name) {
  if (n < 0) throw Error(Errc::InvalidArgument, std::string(name) + " must be >= 0, got " + std::to_string(n));
}

}  // namespace

Dim2Semigroup Dim2Semigroup::make(Int a, Int b) {
  if (a < 2 || b <= a) {
    throw Error(Errc::InvalidArgument,
                "need 2 <= a < b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  if (std::gcd(a, b) != 1) {
    throw Error(Errc::GcdNotOne, "gcd(" + std::to_string(a) + "," + std::to_string(b) + ") != 1");
  }
  return Dim2Semigroup(a, b, mod_inverse(a, b), NumericalSemigroup::from_generators({a, b}));
}

Dim2Semigroup Dim2Semigroup::from(const NumericalSemigroup& s) {
  const auto& gens = s.minimal_generators();
  if (gens.size() != 2) {
    throw Error(Errc::NotDim2, "embedding dimension is " + std::to_string(gens.size()) + ", not 2");
  }
  return make(gens[0], gens[1]);
}

void Dim2Semigroup::require_mbar(Int mbar) const {
  if (mbar < 2 * conductor() - 1) {
    throw Error(Errc::MbarTooSmall, "mbar=" + std::to_string(mbar) + " < 2c-1=" +
                                        std::to_string(2 * conductor() - 1));
  }
}

UVRep Dim2Semigroup::uv_rep(Int n) const noexcept {
  const Int u = floor_mod(floor_mod(n, b_) * a_inv_, b_);
  return {u, (n - u * a_) / b_};
}

IHRep Dim2Semigroup::ih_rep(Int n) const {
  require_nonnegative(n, "n");
  return {floor_mod((n % a_) * a_inv_, b_), n / a_};
}

IntSet Dim2Semigroup::rectangle(Int mbar, Int x_lo, Int x_hi, Int y_lo, Int y_hi) const {
  IntSet out;
  for (Int x = x_lo + 1; x <= x_hi; ++x) {
    for (Int y = y_lo + 1; y <= y_hi; ++y) out.push_back(mbar + x * a_ + y * b_);
  }
  return normalized(std::move(out));
}

IntSet Dim2Semigroup::apery_closed(Int n) const {
  const auto [u, v] = uv_rep(n);
  if (v < -a_) return {};
  // alpha*a + beta*b over 0 <= alpha < u, 0 <= beta < a + v ...
  IntSet out = rectangle(0, -1, u - 1, -1, a_ + v - 1);
  if (v >= 0) {
    // ... plus u <= alpha < b, 0 <= beta < v when n is a member.
    out = set_union(out, rectangle(0, u - 1, b_ - 1, -1, v - 1));
  }
  return out;
}

IntSet Dim2Semigroup::new_divisors(Int mbar, Int n) const {
  require_mbar(mbar);
  require_nonnegative(n, "n");
  const auto [u, v] = uv_rep(n);
  IntSet out = rectangle(mbar, 0, u, -a_, v);
  if (v >= 0) out = set_union(out, rectangle(mbar, u, b_, -a_, v - a_));
  return out;
}

Int Dim2Semigroup::ground_elem(Int mbar, Int i) const {
  require_nonnegative(i, "i");
  return mbar + (i * a_) % b_;
}

IntSet Dim2Semigroup::ground_divisors(Int mbar, Int i) const {
  require_mbar(mbar);
  if (i < 0 || i >= b_) throw Error(Errc::InvalidArgument, "ground index out of [0,b): " + std::to_string(i));
  return rectangle(mbar, 0, i, -a_, -floor_div(i * a_, b_));
}

GroundInterval Dim2Semigroup::triangle_base(Int mbar, Int n) const {
  require_mbar(mbar);
  const auto [i, h] = ih_rep(n);
  if (h >= b_ - 1) return {0, b_ - 1};
  return {i, h};
}

std::vector<Int> Dim2Semigroup::interval_indices(const GroundInterval& interval) const {
  if (is_whole_ground(interval)) {
    std::vector<Int> all(static_cast<std::size_t>(b_));
    std::iota(all.begin(), all.end(), Int{0});
    return all;
  }
  std::vector<Int> out;
  for (Int j = 0; j <= interval.span; ++j) out.push_back((interval.start + j) % b_);
  return normalized(std::move(out));
}

IntSet Dim2Semigroup::interval_elements(Int mbar, const GroundInterval& interval) const {
  IntSet out;
  for (Int j : interval_indices(interval)) out.push_back(ground_elem(mbar, j));
  return normalized(std::move(out));
}

bool Dim2Semigroup::is_amenable_interval(const GroundInterval& interval) const noexcept {
  return is_whole_ground(interval) || (interval.start * a_) % b_ < a_;
}

std::vector<char> Dim2Semigroup::index_mask(const GroundInterval& interval) const {
  std::vector<char> mask(static_cast<std::size_t>(b_), 0);
  for (Int j : interval_indices(interval)) mask[static_cast<std::size_t>(j)] = 1;
  return mask;
}

bool Dim2Semigroup::union_is_amenable_interval(const GroundInterval& lhs,
                                               const GroundInterval& rhs) const {
  auto mask = index_mask(lhs);
  for (Int j : interval_indices(rhs)) mask[static_cast<std::size_t>(j)] = 1;
  Int count = 0;
  Int starts = 0;
  Int start = 0;
  for (Int j = 0; j < b_; ++j) {
    if (!mask[static_cast<std::size_t>(j)]) continue;
    ++count;
    if (!mask[static_cast<std::size_t>((j + b_ - 1) % b_)]) {
      ++starts;
      start = j;
    }
  }
  if (count == b_) return true;
  return starts == 1 && (start * a_) % b_ < a_;
}

bool Dim2Semigroup::precedes(const GroundInterval& lhs, const GroundInterval& rhs) const {
  if (union_is_amenable_interval(lhs, rhs)) return false;
  const auto left = interval_indices(lhs);
  const auto right = interval_indices(rhs);
  if (left.front() == 0) return true;
  if (right.front() == 0) return false;
  return left.back() < right.front();
}

void Dim2Semigroup::require_precedes(const GroundInterval& lhs, const GroundInterval& rhs,
                                     const std::string& name) const {
  if (!precedes(lhs, rhs)) throw Error(Errc::HypothesisViolated, name + " does not hold");
}

void Dim2Semigroup::require_disjoint(const GroundInterval& lhs, const GroundInterval& rhs,
                                     const std::string& name) const {
  const auto mask = index_mask(lhs);
  for (Int j : interval_indices(rhs)) {
    if (mask[static_cast<std::size_t>(j)]) throw Error(Errc::HypothesisViolated, name + " does not hold");
  }
}

void Dim2Semigroup::require_before_last(const GroundInterval& lhs, const GroundInterval& last,
                                        const std::string& name) const {
  // With mbar in lhs only overlap matters: last may wrap round to mbar.
  if (interval_indices(lhs).front() == 0) {
    require_disjoint(lhs, last, name);
  } else {
    require_precedes(lhs, last, name);
  }
}

bool Dim2Semigroup::divides_via_bases(Int mbar, Int n_prime, Int n) const {
  require_nonnegative(n_prime, "n'");
  const GroundInterval base = triangle_base(mbar, n);
  if (is_whole_ground(base)) {
    throw Error(Errc::BaseIsWholeGround, "base of mbar+" + std::to_string(n) + " is the whole ground");
  }
  const GroundInterval base_prime = triangle_base(mbar, n_prime);
  const auto mask = index_mask(base);
  for (Int j : interval_indices(base_prime)) {
    if (!mask[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

IntSet Dim2Semigroup::delta_divisors(Int mbar, Int n1, std::optional<Int> n3,
                                     const DivisorChange& change) const {
  require_mbar(mbar);
  require_nonnegative(n1, "n1");
  if (n3) require_nonnegative(*n3, "n3");

  const GroundInterval l1 = triangle_base(mbar, n1);
  if (interval_indices(l1).front() != 0) {
    throw Error(Errc::HypothesisViolated, "mbar ∈ L1 does not hold");
  }
  const UVRep uv1 = uv_rep(n1);
  std::optional<GroundInterval> l3;
  Int v3 = uv1.v - a_;
  if (n3) {
    l3 = triangle_base(mbar, *n3);
    v3 = uv_rep(*n3).v;
    require_before_last(l1, *l3, "L1 ∩ L3 = ∅");
  }

  struct Visitor {
    const Dim2Semigroup& self;
    Int mbar, n1, v3;
    UVRep uv1;
    GroundInterval l1;
    const std::optional<GroundInterval>& l3;

    IntSet operator()(const Middle& m) const {
      require_nonnegative(m.n2, "n2");
      const GroundInterval l2 = self.triangle_base(mbar, m.n2);
      self.require_precedes(l1, l2, "L1 ≺ L2");
      if (l3) self.require_precedes(l2, *l3, "L2 ≺ L3");
      const UVRep uv2 = self.uv_rep(m.n2);
      return self.rectangle(mbar, uv1.u, uv2.u, v3, uv2.v);
    }
    IntSet operator()(const Extend& e) const {
      require_nonnegative(e.k, "k");
      if (l3) {
        self.require_before_last(self.triangle_base(mbar, n1 + e.k * self.a_), *l3,
                                 "base(mbar+n1+ka) ≺ L3");
      }
      return self.rectangle(mbar, uv1.u, uv1.u + e.k, v3, uv1.v);
    }
    IntSet operator()(const Multiple& m) const {
      if (m.k < uv1.u) {
        throw Error(Errc::HypothesisViolated, "k >= u1 does not hold (k=" + std::to_string(m.k) +
                                                  ", u1=" + std::to_string(uv1.u) + ")");
      }
      const GroundInterval moved = self.triangle_base(mbar, m.k * self.a_);
      if (l3) {
        self.require_before_last(moved, *l3, "base(mbar+ka) ≺ L3");
      } else if (self.is_whole_ground(moved)) {
        throw Error(Errc::HypothesisViolated, "base(mbar+ka) ≠ ground does not hold");
      }
      return self.rectangle(mbar, uv1.u, m.k, v3, 0);
    }
  };
  return std::visit(Visitor{*this, mbar, n1, v3, uv1, l1, l3}, change);
}

}  // namespace sgp
