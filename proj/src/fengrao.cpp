#include "sgp/fengrao.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sgp/divisors.hpp"

namespace sgp {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  Bits operator|(const Bits& other) const {
    Bits out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
    return out;
  }

  Int count() const {
    Int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

 private:
  std::vector<std::uint64_t> words_;
};

void require_r(Int r) {
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be >= 1, got " + std::to_string(r));
}

void require_member(const NumericalSemigroup& s, Int m) {
  if (!s.contains(m)) throw Error(Errc::NotInSemigroup, std::to_string(m) + " is not in S");
}

Configuration make_configuration(const NumericalSemigroup& s, Int m, IntSet elements) {
  const Int count = div_set_multi(s, elements).size();
  return {m, std::move(elements), count};
}

bool better(const Configuration& lhs, const Configuration& rhs) {
  if (lhs.divisor_count != rhs.divisor_count) return lhs.divisor_count < rhs.divisor_count;
  return lhs.elements < rhs.elements;
}

/// Depth-first enumeration of increasing tuples over a candidate list, with
/// optional closure constraints (for amenable sets). Visits tuples in
/// lexicographic order, so the first tuple reaching the final optimum is
/// the lexicographically smallest one.
class TupleSearch {
 public:
  TupleSearch(const NumericalSemigroup& s, IntSet candidates, Int r, Int bound,
              std::uint64_t max_nodes)
      : candidates_(std::move(candidates)),
        r_(r),
        two_g_(2 * s.genus()),
        bound_(bound),
        max_nodes_(max_nodes),
        in_set_(candidates_.size(), 0) {
    const std::size_t width =
        candidates_.empty() ? 1 : static_cast<std::size_t>(candidates_.back()) + 1;
    divisor_bits_.reserve(candidates_.size());
    for (Int x : candidates_) {
      Bits bits(width);
      for (Int t : div_set(s, x).elements) bits.set(static_cast<std::size_t>(t));
      divisor_bits_.push_back(std::move(bits));
    }
  }

  /// Only allow candidate idx once every index in required[idx] is chosen.
  void set_required(std::vector<std::vector<std::size_t>> required) { required_ = std::move(required); }

  void run(const std::vector<std::size_t>& prefix) {
    const std::size_t width =
        candidates_.empty() ? 1 : static_cast<std::size_t>(candidates_.back()) + 1;
    Bits acc(width);
    for (std::size_t idx : prefix) {
      acc = acc | divisor_bits_[idx];
      in_set_[idx] = 1;
      chosen_.push_back(candidates_[idx]);
    }
    std::size_t from = prefix.empty() ? 0 : prefix.back() + 1;
    if (static_cast<Int>(chosen_.size()) == r_) {
      record(acc.count());
      return;
    }
    descend(from, acc);
  }

  bool found() const noexcept { return found_; }
  bool stopped() const noexcept { return stopped_; }
  Int best_value() const noexcept { return bound_; }
  const IntSet& best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool cut(Int lower_bound) const {
    return lower_bound > bound_ || (found_ && lower_bound == bound_);
  }

  void record(Int count) {
    if (cut(count)) return;
    bound_ = count;
    found_ = true;
    best_ = chosen_;
  }

  bool admissible(std::size_t idx) const {
    if (required_.empty()) return true;
    for (std::size_t j : required_[idx]) {
      if (!in_set_[j]) return false;
    }
    return true;
  }

  void descend(std::size_t from, const Bits& acc) {
    const Int need = r_ - static_cast<Int>(chosen_.size());
    const Int rest = need - 1;
    for (std::size_t idx = from; idx < candidates_.size(); ++idx) {
      if (static_cast<Int>(candidates_.size() - idx) < need) break;
      const Int x = candidates_[idx];
      // |D(y)| >= y + 1 - 2g for every y, and it only grows along the list.
      if (cut(x + 1 - two_g_ + rest)) break;
      if (!admissible(idx)) continue;
      if (++nodes_ > max_nodes_) {
        stopped_ = true;
        return;
      }
      Bits next = acc | divisor_bits_[idx];
      const Int count = next.count();
      if (cut(count + rest)) continue;
      chosen_.push_back(x);
      in_set_[idx] = 1;
      if (rest == 0) {
        record(count);
      } else {
        descend(idx + 1, next);
      }
      in_set_[idx] = 0;
      chosen_.pop_back();
      if (stopped_) return;
    }
  }

  IntSet candidates_;
  std::vector<Bits> divisor_bits_;
  std::vector<std::vector<std::size_t>> required_;
  Int r_;
  Int two_g_;
  Int bound_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  bool stopped_ = false;
  std::vector<char> in_set_;
  IntSet chosen_;
  IntSet best_;
};

/// Largest candidate worth considering for an incumbent of value `bound`,
/// and whether the budget lets the search reach it.
std::pair<Int, bool> search_window(const NumericalSemigroup& s, Int bound, const SearchBudget& budget) {
  const Int needed = bound + 2 * s.genus() - 1;
  if (budget.max_element && *budget.max_element < needed) return {*budget.max_element, false};
  return {needed, true};
}

FengRaoResult finish_search(const NumericalSemigroup& s, Int m, Int r, const TupleSearch& search,
                            const Configuration& heuristic, bool certified) {
  Configuration best = heuristic;
  if (search.found()) {
    Configuration found = make_configuration(s, m, search.best());
    if (!better(best, found)) best = std::move(found);
  }
  if (search.stopped()) {
    throw BudgetExceeded("node budget exhausted after " + std::to_string(search.nodes()) +
                             " nodes; best bound " + std::to_string(best.divisor_count) +
                             " is uncertified",
                         best);
  }
  if (!certified) {
    throw BudgetExceeded("element cap below the pruning window; best bound " +
                             std::to_string(best.divisor_count) + " is uncertified",
                         best);
  }
  return {m, r, best.divisor_count, best, Method::Search};
}

}  // namespace

FengRaoResult classical_fr(const NumericalSemigroup& s, Int m) {
  require_member(s, m);
  const Int last = std::max(m, 2 * s.conductor() - 1);
  Configuration best;
  bool have = false;
  for (Int x = m; x <= last; ++x) {
    if (!s.contains(x)) continue;
    const Int count = div_set(s, x).size();
    if (!have || count < best.divisor_count) {
      best = {m, {x}, count};
      have = true;
    }
  }
  return {m, 1, best.divisor_count, best, Method::Search};
}

Int classical_fr_two_gen(const Dim2Semigroup& s, Int m) {
  if (m < s.conductor()) {
    throw Error(Errc::BelowConductor,
                "m=" + std::to_string(m) + " < c=" + std::to_string(s.conductor()));
  }
  const Int threshold = m + 2 - 2 * s.genus();
  Int x = threshold;
  while (!s.base().contains(x)) ++x;
  return x;
}

FengRaoResult generalized_fr(const NumericalSemigroup& s, Int m, Int r, const SearchBudget& budget) {
  require_r(r);
  require_member(s, m);

  IntSet greedy;
  for (Int x = m; static_cast<Int>(greedy.size()) < r; ++x) {
    if (s.contains(x)) greedy.push_back(x);
  }
  Configuration heuristic = make_configuration(s, m, std::move(greedy));
  if (m >= s.conductor()) {
    IntSet triangle = restrict_to(div_set(s, m + s.rho(r)).elements, m, m + s.rho(r) + 1);
    Configuration candidate = make_configuration(s, m, std::move(triangle));
    if (static_cast<Int>(candidate.elements.size()) == r && better(candidate, heuristic)) {
      heuristic = std::move(candidate);
    }
  }

  const auto [window, certified] = search_window(s, heuristic.divisor_count, budget);
  TupleSearch search(s, s.elements_in(m, window), r, heuristic.divisor_count, budget.max_nodes);
  search.run({});
  return finish_search(s, m, r, search, heuristic, certified);
}

bool is_amenable(const NumericalSemigroup& s, Int mbar, const IntSet& set) {
  require_mbar(s, mbar);
  for (Int x : set) {
    if (x < mbar || !s.contains(x)) {
      throw Error(Errc::InvalidArgument, std::to_string(x) + " is not a member >= mbar");
    }
  }
  if (!set_contains(set, mbar)) return false;
  for (Int x : set) {
    for (Int y = mbar; y <= x; ++y) {
      if (s.contains(y) && s.contains(x - y) && !set_contains(set, y)) return false;
    }
  }
  return true;
}

namespace {

/// For each candidate, the indices of the candidates dividing it.
std::vector<std::vector<std::size_t>> divisor_indices(const NumericalSemigroup& s,
                                                      const IntSet& candidates) {
  std::vector<std::vector<std::size_t>> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (s.contains(candidates[i] - candidates[j])) out[i].push_back(j);
    }
  }
  return out;
}

void collect_amenable(const IntSet& candidates, const std::vector<std::vector<std::size_t>>& required,
                      std::size_t from, Int r, std::vector<char>& in_set, IntSet& chosen,
                      std::vector<IntSet>& out) {
  if (static_cast<Int>(chosen.size()) == r) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t idx = from; idx < candidates.size(); ++idx) {
    bool ok = true;
    for (std::size_t j : required[idx]) ok = ok && in_set[j];
    if (!ok) continue;
    in_set[idx] = 1;
    chosen.push_back(candidates[idx]);
    collect_amenable(candidates, required, idx + 1, r, in_set, chosen, out);
    chosen.pop_back();
    in_set[idx] = 0;
  }
}

}  // namespace

std::vector<IntSet> amenable_sets(const NumericalSemigroup& s, Int mbar, Int r, Int max_element) {
  require_mbar(s, mbar);
  require_r(r);
  std::vector<IntSet> out;
  if (max_element < mbar) return out;
  const IntSet candidates = s.elements_in(mbar, max_element);
  const auto required = divisor_indices(s, candidates);
  std::vector<char> in_set(candidates.size(), 0);
  in_set[0] = 1;
  IntSet chosen{mbar};
  collect_amenable(candidates, required, 1, r, in_set, chosen, out);
  return out;
}

FengRaoResult amenable_fr(const NumericalSemigroup& s, Int mbar, Int r, const SearchBudget& budget) {
  const Configuration heuristic = optimal_amenable(s, mbar, r).configuration;
  const auto [window, certified] = search_window(s, heuristic.divisor_count, budget);
  const IntSet candidates = s.elements_in(mbar, std::max(window, mbar));
  auto required = divisor_indices(s, candidates);
  TupleSearch search(s, candidates, r, heuristic.divisor_count, budget.max_nodes);
  search.set_required(std::move(required));
  search.run({0});
  return finish_search(s, mbar, r, search, heuristic, certified);
}

AmenableWitness optimal_amenable(const NumericalSemigroup& s, Int mbar, Int r) {
  require_mbar(s, mbar);
  require_r(r);
  const Int top = mbar + s.rho(r);
  IntSet elements = restrict_to(div_set(s, top).elements, mbar, top + 1);
  AmenableWitness out;
  out.configuration = make_configuration(s, mbar, std::move(elements));
  out.proven_optimal = s.embedding_dimension() == 2 || s.genus() == 0;
  return out;
}

FengRaoNumber feng_rao_number(const NumericalSemigroup& s, Int r, const SearchBudget& budget) {
  require_r(r);
  if (s.genus() == 0) return {r, r - 1, Method::Formula};
  if (s.embedding_dimension() == 2) return {r, s.rho(r), Method::Formula};
  if (r >= s.conductor()) return {r, r + s.genus() - 1, Method::Formula};
  return feng_rao_number_by_search(s, r, budget);
}

FengRaoNumber feng_rao_number_by_search(const NumericalSemigroup& s, Int r, const SearchBudget& budget) {
  require_r(r);
  const Int mbar = std::max<Int>(2 * s.conductor() - 1, 0);
  const FengRaoResult result = generalized_fr(s, mbar, r, budget);
  return {r, result.value - mbar - 1 + 2 * s.genus(), Method::Search};
}

CorollaryValue coro_final_value(const Dim2Semigroup& s, Int r, Int k) {
  require_r(r);
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2, got " + std::to_string(k));
  const Int rho_k = s.base().rho(k);
  return {2 * s.genus() - 1 + rho_k, s.base().rho(r) + rho_k, true};
}

CorollaryValue coro_final_gap_bound(const Dim2Semigroup& s, Int r, Int gap_index) {
  require_r(r);
  const IntSet gaps = s.base().gaps();
  if (gap_index < 1 || gap_index > static_cast<Int>(gaps.size())) {
    throw Error(Errc::InvalidArgument, "gap index out of [1,g]: " + std::to_string(gap_index));
  }
  const Int gap = gaps[static_cast<std::size_t>(gap_index - 1)];
  return {2 * s.genus() - 1 + gap, s.base().rho(r) + gap, false};
}

Int conjectured_min_formula(const NumericalSemigroup& s, Int m, Int r) {
  require_r(r);
  Int x = std::max<Int>(m + 1 - 2 * s.genus(), 0);
  while (!s.contains(x)) ++x;
  return s.rho(r) + x;
}

}  // namespace sgp
