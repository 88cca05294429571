#include "sgp/bounds.hpp"

#include <sstream>
#include <thread>

#include "sgp/dim2.hpp"

namespace sgp {

namespace {

void require_row_input(const NumericalSemigroup& s, Int m, Int r) {
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be >= 1, got " + std::to_string(r));
  if (m + 1 < s.conductor()) {
    throw Error(Errc::BelowConductor, "m+1=" + std::to_string(m + 1) + " < c=" +
                                          std::to_string(s.conductor()));
  }
  if (!s.contains(m)) throw Error(Errc::NotInSemigroup, std::to_string(m) + " is not in S");
}

void require_field(Int q) {
  if (!is_prime_power(q)) throw Error(Errc::BadField, "q=" + std::to_string(q) + " is not a prime power");
}

Int order_bound_next(const NumericalSemigroup& s, Int m) {
  if (s.embedding_dimension() == 2 && m >= s.conductor()) {
    return classical_fr_two_gen(Dim2Semigroup::from(s), m);
  }
  return classical_fr(s, m + 1).value;
}

Int griesmer_sum(Int d, Int r, Int q) {
  Int sum = 0;
  Int power = 1;
  for (Int i = 0; i < r; ++i) {
    sum += (d + power - 1) / power;
    // Once q^i >= d every further term is 1; stop growing to avoid overflow.
    if (power < d) power *= q;
  }
  return sum;
}

Winner compare(Int gfr, Int gob) {
  if (gfr > gob) return Winner::Gfr;
  if (gob > gfr) return Winner::Gob;
  return Winner::Tie;
}

}  // namespace

bool is_prime_power(Int q) {
  if (q < 2) return false;
  for (Int p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

Int gfr_bound(const NumericalSemigroup& s, Int m, Int r, const SearchBudget& budget) {
  require_row_input(s, m, r);
  return m + 2 - 2 * s.genus() + feng_rao_number(s, r, budget).value;
}

LiteralBound thm_final_literal_bound(const NumericalSemigroup& s, Int m, Int r) {
  if (s.embedding_dimension() != 2) {
    throw Error(Errc::NotDim2, "rho_r stands for E(S,r) only in embedding dimension two");
  }
  require_row_input(s, m, r);
  const Int d = classical_fr(s, m + 1).value;
  return {d + s.rho(r), d > m + 2 - 2 * s.genus()};
}

Int griesmer_order_bound(const NumericalSemigroup& s, Int m, Int r, Int q) {
  require_field(q);
  require_row_input(s, m, r);
  return griesmer_sum(order_bound_next(s, m), r, q);
}

Int code_dimension(const NumericalSemigroup& s, Int m, Int n) {
  if (!(2 * s.genus() - 2 < m && m < n) || !s.contains(m)) {
    throw Error(Errc::OutOfRange, "need 2g-2 < m < n and m in S (m=" + std::to_string(m) +
                                      ", n=" + std::to_string(n) + ")");
  }
  return n - m + s.genus() - 1;
}

std::string_view winner_name(Winner w) {
  switch (w) {
    case Winner::Gfr: return "GFR";
    case Winner::Gob: return "GOB";
    case Winner::Tie: return "Tie";
  }
  return "?";
}

BoundTable hierarchy_table(const NumericalSemigroup& s, Int r, Int q, Int lo, Int hi,
                           std::optional<Int> n, unsigned threads, const SearchBudget& budget) {
  require_field(q);
  if (r < 1) throw Error(Errc::InvalidArgument, "r must be >= 1, got " + std::to_string(r));
  if (lo < s.conductor() - 1) {
    throw Error(Errc::BelowConductor, "range start " + std::to_string(lo) + " < c-1=" +
                                          std::to_string(s.conductor() - 1));
  }
  if (hi < lo) throw Error(Errc::InvalidArgument, "empty m-range");

  BoundTable table;
  table.params = {s.generators(), r, q, n, lo, hi};
  const Int e = feng_rao_number(s, r, budget).value;

  std::vector<Int> members;
  for (Int m = lo; m <= hi; ++m) {
    if (s.contains(m)) {
      members.push_back(m);
    } else {
      table.skipped.push_back(m);
    }
  }
  table.rows.resize(members.size());

  auto fill = [&](std::size_t idx) {
    const Int m = members[idx];
    BoundRow row;
    row.m = m;
    row.gfr = m + 2 - 2 * s.genus() + e;
    row.gob = griesmer_sum(order_bound_next(s, m), r, q);
    row.winner = compare(row.gfr, row.gob);
    if (n && 2 * s.genus() - 2 < m && m < *n) row.k_m = *n - m + s.genus() - 1;
    table.rows[idx] = row;
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, members.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < members.size(); ++i) fill(i);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < members.size(); i += workers) fill(i);
      });
    }
  }
  return table;
}

std::string to_csv(const BoundTable& table) {
  std::ostringstream out;
  out << "m,k_m,gfr,gob,winner\n";
  for (const auto& row : table.rows) {
    out << row.m << ',';
    if (row.k_m) out << *row.k_m;
    out << ',' << row.gfr << ',' << row.gob << ',' << winner_name(row.winner) << '\n';
  }
  if (!table.skipped.empty()) {
    out << "# skipped gaps:";
    for (Int m : table.skipped) out << ' ' << m;
    out << '\n';
  }
  return out.str();
}

std::string to_markdown(const BoundTable& table, Int label_offset) {
  std::ostringstream out;
  auto line = [&](std::string_view label, auto value) {
    out << "| " << label << " |";
    for (const auto& row : table.rows) out << ' ' << value(row) << " |";
    out << '\n';
  };
  line("m", [&](const BoundRow& row) { return std::to_string(row.m - label_offset); });
  out << "|---|";
  for (std::size_t i = 0; i < table.rows.size(); ++i) out << "---|";
  out << '\n';
  if (table.params.n) {
    line("k_m", [](const BoundRow& row) { return row.k_m ? std::to_string(*row.k_m) : std::string("-"); });
  }
  line("GFR", [](const BoundRow& row) { return std::to_string(row.gfr); });
  line("GOB", [](const BoundRow& row) { return std::to_string(row.gob); });
  if (!table.skipped.empty()) {
    out << "\nSkipped gaps:";
    for (Int m : table.skipped) out << ' ' << m - label_offset;
    out << '\n';
  }
  return out.str();
}

}  // namespace sgp
