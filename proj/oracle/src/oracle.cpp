#include "sgp_oracle/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgp::oracle {

NaiveSemigroup::NaiveSemigroup(std::vector<Int> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("no generators");
  std::sort(gens_.begin(), gens_.end());
  schur_ = (gens_.front() - 1) * (gens_.back() - 1);
}

bool NaiveSemigroup::contains(Int x) {
  if (x < 0) return false;
  while (static_cast<Int>(memo_.size()) <= x) {
    const Int y = static_cast<Int>(memo_.size());
    bool member = y == 0;
    for (Int g : gens_) {
      if (g <= y && memo_[static_cast<std::size_t>(y - g)]) member = true;
    }
    memo_.push_back(member ? 1 : 0);
  }
  return memo_[static_cast<std::size_t>(x)] != 0;
}

Int NaiveSemigroup::genus() {
  Int count = 0;
  for (Int x = 1; x < schur_; ++x) count += contains(x) ? 0 : 1;
  return count;
}

bool naive_contains(const std::vector<Int>& gens, Int x) { return NaiveSemigroup(gens).contains(x); }

Set naive_apery(const std::vector<Int>& gens, Int n) {
  NaiveSemigroup s(gens);
  // s - n not in S forces s - n below the Schur bound.
  const Int end = s.schur_bound() + std::max<Int>(n, 0);
  Set out;
  for (Int x = 0; x < end; ++x) {
    if (s.contains(x) && !s.contains(x - n)) out.push_back(x);
  }
  return out;
}

Set naive_divisors(const std::vector<Int>& gens, Int x) { return naive_divisors(gens, Set{x}); }

Set naive_divisors(const std::vector<Int>& gens, const Set& targets) {
  NaiveSemigroup s(gens);
  Set out;
  for (Int x : targets) {
    for (Int y = 0; y <= x; ++y) {
      if (s.contains(y) && s.contains(x - y)) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct Exhaustive {
  NaiveSemigroup& s;
  const Set& members;
  Int r;
  Set chosen;
  NaiveFr best;
  bool found = false;

  void go(std::size_t from) {
    if (static_cast<Int>(chosen.size()) == r) {
      const Int count = static_cast<Int>(naive_divisors(s.gens(), chosen).size());
      if (!found || count < best.value) {
        best.value = count;
        best.witness = chosen;
        found = true;
      }
      return;
    }
    for (std::size_t i = from; i < members.size(); ++i) {
      chosen.push_back(members[i]);
      go(i + 1);
      chosen.pop_back();
    }
  }
};

}  // namespace

NaiveFr naive_generalized_fr(const std::vector<Int>& gens, Int m, Int r, Int window) {
  NaiveSemigroup s(gens);
  Set members;
  for (Int x = std::max<Int>(m, 0); x <= window; ++x) {
    if (s.contains(x)) members.push_back(x);
  }
  Exhaustive search{s, members, r, {}, {}, false};
  search.go(0);
  if (!search.found) return {-1, {}, false};
  search.best.certified = window >= search.best.value + 2 * s.genus() - 1;
  return search.best;
}

}  // namespace sgp::oracle
