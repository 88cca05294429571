#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgp/fengrao.hpp"
#include "sgp/semigroup.hpp"

namespace sgp {

/// m + 2 - 2g + E(S, r), the lower bound on d_r(C_m) shown in the GFR rows.
/// Requires m in S and m + 1 >= c.
Int gfr_bound(const NumericalSemigroup& s, Int m, Int r, const SearchBudget& budget = {});

struct LiteralBound {
  Int value = 0;
  /// Set when delta_FR(m + 1) > m + 2 - 2g, i.e. the value exceeds what the
  /// GFR bound can justify.
  bool caveat = false;
};

/// delta_FR(m + 1) + rho_r for embedding dimension two.
LiteralBound thm_final_literal_bound(const NumericalSemigroup& s, Int m, Int r);

/// sum_{i=0}^{r-1} ceil(delta_FR(m + 1) / q^i). q must be a prime power.
Int griesmer_order_bound(const NumericalSemigroup& s, Int m, Int r, Int q);

/// k_m = n - m + g - 1, valid for 2g - 2 < m < n and m in S.
Int code_dimension(const NumericalSemigroup& s, Int m, Int n);

bool is_prime_power(Int q);

enum class Winner { Gfr, Gob, Tie };
std::string_view winner_name(Winner w);

struct BoundRow {
  Int m = 0;
  std::optional<Int> k_m;
  Int gfr = 0;
  Int gob = 0;
  Winner winner = Winner::Tie;
};

struct TableParams {
  std::vector<Int> generators;
  Int r = 1;
  Int q = 2;
  std::optional<Int> n;
  Int lo = 0;
  Int hi = 0;
};

struct BoundTable {
  TableParams params;
  std::vector<BoundRow> rows;  ///< ascending m, members only
  IntSet skipped;              ///< gaps of S inside [lo, hi]
};

/// One row per member of [lo, hi]. Requires lo >= c - 1. Rows are computed on
/// up to `threads` workers and stored by position, so the output does not
/// depend on scheduling. k_m is filled only where code_dimension applies.
BoundTable hierarchy_table(const NumericalSemigroup& s, Int r, Int q, Int lo, Int hi,
                           std::optional<Int> n = std::nullopt, unsigned threads = 1,
                           const SearchBudget& budget = {});

/// Columns m,k_m,gfr,gob,winner, then a comment line listing skipped gaps.
std::string to_csv(const BoundTable& table);

/// m across the top, one line each for k_m (if present), GFR and GOB.
/// Column labels print m - label_offset.
std::string to_markdown(const BoundTable& table, Int label_offset = 0);

}  // namespace sgp
