#include <doctest.h>

#include "sgp/divisors.hpp"
#include "sgp/fengrao.hpp"

using namespace sgp;

namespace {

const auto s25 = NumericalSemigroup::from_generators({2, 5});
const auto s35 = NumericalSemigroup::from_generators({3, 5});
const auto s6 = NumericalSemigroup::from_generators({6, 13, 14, 15, 16, 17});

}  // namespace

TEST_CASE("classical distance") {
  auto r = classical_fr(s25, 4);
  CHECK(r.value == 2);
  CHECK(r.witness.elements == IntSet{5});
  r = classical_fr(s35, 9);
  CHECK(r.value == 3);
  CHECK(r.witness.elements == IntSet{10});
  for (Int m = 15; m < 40; ++m) CHECK(classical_fr(s35, m).value == m + 1 - 8);
  CHECK_THROWS_AS(classical_fr(s35, 7), Error);
}

TEST_CASE("classical distance on two generators") {
  CHECK(classical_fr_two_gen(Dim2Semigroup::make(3, 5), 8) == 3);
  CHECK(classical_fr_two_gen(Dim2Semigroup::make(7, 11), 60) == 7);
  CHECK(classical_fr_two_gen(Dim2Semigroup::make(4, 5), 12) == 4);
  try {
    classical_fr_two_gen(Dim2Semigroup::make(3, 5), 7);
    FAIL("expected BelowConductor");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BelowConductor);
  }
}

TEST_CASE("generalized distance") {
  const auto a = generalized_fr(s25, 4, 3);
  CHECK(a.value == 5);
  CHECK(a.witness.divisor_count == 5);
  CHECK(div_set_multi(s25, {4, 5, 7}).elements == IntSet{0, 2, 4, 5, 7});
  const auto b = generalized_fr(s35, 15, 2);
  CHECK(b.value == 11);
  CHECK(b.witness.elements == IntSet{15, 18});
  for (Int m : {0, 3, 5, 6, 8, 9, 10, 12}) CHECK(generalized_fr(s35, m, 1).value == classical_fr(s35, m).value);
  CHECK(generalized_fr(s25, 5, 3).value == 6);
  CHECK(generalized_fr(s35, 10, 2).value == 6);
  CHECK_THROWS_AS(generalized_fr(s35, 7, 2), Error);
  CHECK_THROWS_AS(generalized_fr(s35, 8, 0), Error);
}

TEST_CASE("witness is lexicographically smallest") {
  // {4,5,6} and {4,5,7} both reach 5 divisors.
  CHECK(generalized_fr(s25, 4, 3).witness.elements == IntSet{4, 5, 6});
  CHECK(div_set_multi(s25, {4, 5, 6}).size() == 5);
}

TEST_CASE("budget exhaustion carries an upper bound") {
  SearchBudget budget;
  budget.max_nodes = 2;
  try {
    generalized_fr(s35, 15, 4, budget);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
    CHECK(e.best_bound() >= 14);
    CHECK(static_cast<Int>(e.best().elements.size()) == 4);
    CHECK(div_set_multi(s35, e.best().elements).size() == e.best_bound());
  }
  SearchBudget capped;
  capped.max_element = 16;
  CHECK_THROWS_AS(generalized_fr(s35, 15, 2, capped), BudgetExceeded);
}

TEST_CASE("amenable sets") {
  CHECK(is_amenable(s35, 15, {15}));
  CHECK(is_amenable(s35, 15, {15, 18}));
  CHECK_FALSE(is_amenable(s35, 15, {18}));
  CHECK_FALSE(is_amenable(s35, 15, {15, 21}));
  CHECK_THROWS_AS(is_amenable(s35, 14, {15}), Error);

  const auto sets = amenable_sets(s35, 15, 3, 30);
  CHECK_FALSE(sets.empty());
  for (const auto& set : sets) {
    CHECK(set.size() == 3);
    CHECK(is_amenable(s35, 15, set));
  }
}

TEST_CASE("triangle witnesses") {
  auto w = optimal_amenable(s35, 15, 2);
  CHECK(w.configuration.elements == IntSet{15, 18});
  CHECK(w.configuration.divisor_count == 11);
  CHECK(w.proven_optimal);
  w = optimal_amenable(s35, 15, 1);
  CHECK(w.configuration.elements == IntSet{15});
  CHECK(w.configuration.divisor_count == 8);
  w = optimal_amenable(s25, 7, 3);
  CHECK(w.configuration.elements == IntSet{7, 9, 11});
  CHECK(w.configuration.divisor_count == 8);
  CHECK_FALSE(optimal_amenable(s6, 23, 2).proven_optimal);
}

TEST_CASE("amenable search agrees with the unrestricted search") {
  for (Int r = 1; r <= 4; ++r) {
    CHECK(amenable_fr(s35, 15, r).value == generalized_fr(s35, 15, r).value);
    CHECK(amenable_fr(s6, 23, r).value == generalized_fr(s6, 23, r).value);
  }
}

TEST_CASE("Feng-Rao numbers") {
  const auto e = feng_rao_number(NumericalSemigroup::from_generators({7, 11}), 10);
  CHECK(e.value == 29);
  CHECK(e.method == Method::Formula);
  const auto e6 = feng_rao_number(s6, 2);
  CHECK(e6.value == 3);
  CHECK(e6.method == Method::Search);
  CHECK(s6.rho(2) == 6);
  CHECK(feng_rao_number(NumericalSemigroup::from_generators({1}), 4).value == 3);
  CHECK(feng_rao_number(s6, 12).value == 12 + 10 - 1);
  for (Int r = 1; r <= 5; ++r) CHECK(feng_rao_number_by_search(s35, r).value == s35.rho(r));
}

TEST_CASE("E(S,r) bounds and monotonicity") {
  const auto s = NumericalSemigroup::from_generators({4, 6, 9});
  Int previous = -1;
  for (Int r = 1; r <= 6; ++r) {
    const Int e = feng_rao_number(s, r).value;
    CHECK(e >= previous);
    // E(S,1) = 0, so the lower bound r only applies from r = 2 on.
    CHECK(e >= (r >= 2 ? r : 0));
    CHECK(e <= s.rho(r));
    previous = e;
  }
}

TEST_CASE("distance is affine above 2c-1") {
  for (const auto* s : {&s25, &s35, &s6}) {
    for (Int r = 1; r <= 3; ++r) {
      const Int e = feng_rao_number_by_search(*s, r).value;
      for (Int m = 2 * s->conductor() - 1; m <= 2 * s->conductor() + 20; ++m) {
        CHECK(generalized_fr(*s, m, r).value == m + 1 - 2 * s->genus() + e);
      }
    }
  }
}

TEST_CASE("closed values on two generators") {
  const auto d25 = Dim2Semigroup::make(2, 5);
  auto v = coro_final_value(d25, 3, 2);
  CHECK(v.m == 5);
  CHECK(v.value == 6);
  CHECK(v.exact);
  v = coro_final_value(Dim2Semigroup::make(3, 5), 2, 2);
  CHECK(v.m == 10);
  CHECK(v.value == 6);
  CHECK(coro_final_value(d25, 1, 2).value == 2);
  CHECK_THROWS_AS(coro_final_value(d25, 2, 1), Error);

  const auto gap = coro_final_gap_bound(d25, 3, 2);
  CHECK(gap.m == 6);
  CHECK(gap.value == 7);
  CHECK_FALSE(gap.exact);
  CHECK(generalized_fr(s25, gap.m, 3).value >= gap.value);
}

TEST_CASE("conjectured formula fails on <2,5>") {
  CHECK(conjectured_min_formula(s25, 4, 3) == 6);
  CHECK(generalized_fr(s25, 4, 3).value == 5);
}
