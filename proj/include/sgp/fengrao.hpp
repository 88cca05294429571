#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgp/dim2.hpp"
#include "sgp/int_set.hpp"
#include "sgp/semigroup.hpp"

namespace sgp {

/// An (S, m)-configuration: members m <= m_1 < ... < m_r with |D(m_1..m_r)|.
struct Configuration {
  Int m = 0;
  IntSet elements;
  Int divisor_count = 0;
};

enum class Method { Formula, Search };

struct FengRaoResult {
  Int m = 0;
  Int r = 1;
  Int value = 0;
  Configuration witness;
  Method method = Method::Search;
};

struct FengRaoNumber {
  Int r = 1;
  Int value = 0;
  Method method = Method::Formula;
};

inline constexpr std::uint64_t kDefaultSearchNodes = 10'000'000;

/// Limits for the configuration search. `max_element` caps the largest
/// candidate; when it is below what the pruning rule needs, the result
/// cannot be certified and BudgetExceeded is raised.
struct SearchBudget {
  std::uint64_t max_nodes = kDefaultSearchNodes;
  std::optional<Int> max_element;
};

/// Raised when a search stops before it can certify its answer. Carries the
/// best configuration seen, which is only an upper bound.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, Configuration best)
      : Error(Errc::BudgetExceeded, what), best_(std::move(best)) {}

  Int best_bound() const noexcept { return best_.divisor_count; }
  const Configuration& best() const noexcept { return best_; }

 private:
  Configuration best_;
};

/// delta_FR(m) = min |D(m_1)| over members m_1 >= m. The scan stops at
/// max(m, 2c - 1) since |D(x)| = x + 1 - 2g grows strictly beyond it.
FengRaoResult classical_fr(const NumericalSemigroup& s, Int m);

/// delta_FR(m + 1) = min{ rho_k : rho_k >= m + 2 - 2g } for m >= c.
Int classical_fr_two_gen(const Dim2Semigroup& s, Int m);

/// delta_FR^r(m) by depth-first branch and bound over increasing r-tuples of
/// members >= m, visited in lexicographic order.
///
/// The incumbent starts at the better of the first r members >= m and, for
/// m >= c, the triangle D(m + rho_r) ∩ [m, inf). A partial tuple is cut when
/// |D(partial)| plus the number of elements still to choose exceeds the
/// incumbent. Every x satisfies |D(x)| >= x + 1 - 2g, so candidates above
/// incumbent + 2g - 1 never help. The witness is the lexicographically
/// smallest optimal tuple.
FengRaoResult generalized_fr(const NumericalSemigroup& s, Int m, Int r, const SearchBudget& budget = {});

/// mbar ∈ M and D(x) ∩ [mbar, inf) ⊆ M for every x in M.
bool is_amenable(const NumericalSemigroup& s, Int mbar, const IntSet& set);

/// Every amenable set of cardinality r with elements <= max_element.
std::vector<IntSet> amenable_sets(const NumericalSemigroup& s, Int mbar, Int r, Int max_element);

/// delta_FR^r(mbar) with the search restricted to amenable sets.
FengRaoResult amenable_fr(const NumericalSemigroup& s, Int mbar, Int r, const SearchBudget& budget = {});

struct AmenableWitness {
  Configuration configuration;
  /// True when the configuration is known to be optimal (embedding
  /// dimension two, or the trivial semigroup); otherwise an upper bound.
  bool proven_optimal = false;
};

/// M = D(mbar + rho_r) ∩ [mbar, inf), which has exactly r elements.
AmenableWitness optimal_amenable(const NumericalSemigroup& s, Int mbar, Int r);

/// E(S, r): closed form when one is known, otherwise
/// delta_FR^r(2c - 1) - 2c + 2g by search.
FengRaoNumber feng_rao_number(const NumericalSemigroup& s, Int r, const SearchBudget& budget = {});

/// E(S, r) from the configuration search at mbar = max(2c - 1, 0), never
/// from a closed form.
FengRaoNumber feng_rao_number_by_search(const NumericalSemigroup& s, Int r,
                                        const SearchBudget& budget = {});

struct CorollaryValue {
  Int m = 0;
  Int value = 0;
  bool exact = true;  ///< false: value is only a lower bound
};

/// delta_FR^r(2g - 1 + rho_k) = rho_r + rho_k, k >= 2.
CorollaryValue coro_final_value(const Dim2Semigroup& s, Int r, Int k);

/// delta_FR^r(2g - 1 + l_i) >= rho_r + l_i for the i-th gap l_i, 1 <= i <= g.
CorollaryValue coro_final_gap_bound(const Dim2Semigroup& s, Int r, Int gap_index);

/// min{ rho_r + rho_k : rho_k >= m + 1 - 2g }. Not a valid formula for
/// delta_FR^r in general; kept to reproduce the counterexample on <2,5>.
Int conjectured_min_formula(const NumericalSemigroup& s, Int m, Int r);

}  // namespace sgp
