#include "sgp/divisors.hpp"

#include <algorithm>
#include <string>

namespace sgp {

namespace {

void scan_divisors(const NumericalSemigroup& s, Int x, IntSet& out) {
  for (Int t = 0; t <= x; ++t) {
    if (s.contains(t) && s.contains(x - t)) out.push_back(t);
  }
}

void require_nonnegative_n(Int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "n must be >= 0, got " + std::to_string(n));
}

}  // namespace

DivisorSet div_set(const NumericalSemigroup& s, Int x) {
  DivisorSet d;
  d.targets = {x};
  scan_divisors(s, x, d.elements);
  return d;
}

DivisorSet div_set_multi(const NumericalSemigroup& s, std::span<const Int> targets) {
  if (targets.empty()) throw Error(Errc::EmptySet, "D(M) needs a nonempty M");
  DivisorSet d;
  d.targets = normalized(IntSet(targets.begin(), targets.end()));
  for (Int x : d.targets) scan_divisors(s, x, d.elements);
  d.elements = normalized(std::move(d.elements));
  return d;
}

void require_mbar(const NumericalSemigroup& s, Int mbar) {
  const Int floor = std::max<Int>(2 * s.conductor() - 1, 0);
  if (mbar < floor) {
    throw Error(Errc::MbarTooSmall,
                "mbar=" + std::to_string(mbar) + " < 2c-1=" + std::to_string(floor));
  }
}

IntSet new_divisors_via_apery(const NumericalSemigroup& s, Int mbar, Int n) {
  require_mbar(s, mbar);
  require_nonnegative_n(n);
  IntSet out;
  for (Int a : s.apery(n)) out.push_back(mbar + n - a);
  return normalized(std::move(out));
}

IntSet symmetric_shift_divisors(const NumericalSemigroup& s, Int mbar, Int n) {
  if (!s.is_symmetric()) throw Error(Errc::NotSymmetric, "semigroup is not symmetric");
  require_mbar(s, mbar);
  require_nonnegative_n(n);
  IntSet out;
  for (Int a : s.apery(n)) out.push_back(a + mbar - s.frobenius());
  return out;
}

}  // namespace sgp
