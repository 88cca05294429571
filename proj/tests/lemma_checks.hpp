#pragma once

// Randomized instances of the ground/triangle lemmas for <a,b>, each checked
// against the brute-force oracle. Shared by the property tests and the
// acceptance binary.

#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sgp/dim2.hpp"
#include "sgp_oracle/oracle.hpp"

namespace checks {

using sgp::Int;
using sgp::IntSet;

struct Pair {
  Int a;
  Int b;
};

inline std::vector<Pair> coprime_pairs(Int max_product) {
  std::vector<Pair> out;
  for (Int a = 2; a * (a + 1) <= max_product; ++a) {
    for (Int b = a + 1; a * b <= max_product; ++b) {
      if (std::gcd(a, b) == 1) out.push_back({a, b});
    }
  }
  return out;
}

struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }
};

/// One semigroup <a,b> with its oracle and a random mbar >= 2c - 1.
class Context {
 public:
  Context(Pair p, std::mt19937_64& rng)
      : s(sgp::Dim2Semigroup::make(p.a, p.b)), oracle({p.a, p.b}), rng_(rng) {
    mbar = 2 * s.conductor() - 1 + uniform(0, p.b);
  }

  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }

  /// Oracle D(targets).
  IntSet D(const IntSet& targets) {
    IntSet out;
    for (Int x : targets) {
      for (Int y = 0; y <= x; ++y) {
        if (oracle.contains(y) && oracle.contains(x - y)) out.push_back(y);
      }
    }
    return sgp::normalized(std::move(out));
  }

  static IntSet window(const IntSet& values, Int lo, Int hi) { return sgp::restrict_to(values, lo, hi); }

  /// n = (i*a mod b) + h*a for a random amenable start i and length h + 1.
  Int random_vertex(Int max_h) {
    while (true) {
      const Int i = uniform(0, s.b() - 1);
      if ((i * s.a()) % s.b() < s.a()) return (i * s.a()) % s.b() + uniform(0, max_h) * s.a();
    }
  }

  /// A vertex whose base holds mbar, i.e. a member of S.
  Int random_member(Int below) {
    while (true) {
      const Int n = uniform(0, below - 1);
      if (oracle.contains(n)) return n;
    }
  }

  std::string describe(const std::string& what) const {
    std::ostringstream o;
    o << what << " on <" << s.a() << "," << s.b() << "> mbar=" << mbar;
    return o.str();
  }

  sgp::Dim2Semigroup s;
  sgp::oracle::NaiveSemigroup oracle;
  Int mbar = 0;

 private:
  std::mt19937_64& rng_;
};

/// Each check draws one instance. It returns false, touching nothing, when the
/// draw misses the lemma's hypotheses; otherwise it records the outcome.

inline bool betweenness(Context& ctx, Tally& tally) {
  const Int b = ctx.s.b();
  if (b < 3) return false;
  Int i = ctx.uniform(0, b - 1), j = ctx.uniform(0, b - 1), k = ctx.uniform(0, b - 1);
  if (!(i < j && j < k)) return false;
  const IntSet gi = ctx.s.ground_divisors(ctx.mbar, i);
  const IntSet gj = ctx.s.ground_divisors(ctx.mbar, j);
  const IntSet gk = ctx.s.ground_divisors(ctx.mbar, k);
  const IntSet base = ctx.D({ctx.mbar});
  const bool closed_form = gj == sgp::set_difference(ctx.D({ctx.s.ground_elem(ctx.mbar, j)}), base);
  tally.record(closed_form && sgp::is_subset(sgp::set_intersection(gi, gk), gj), [&] {
    return ctx.describe("betweenness i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
  });
  return true;
}

inline bool triangle_bases(Context& ctx, Tally& tally) {
  const Int n = ctx.uniform(0, 2 * ctx.s.a() * ctx.s.b());
  const IntSet got = ctx.s.interval_elements(ctx.mbar, ctx.s.triangle_base(ctx.mbar, n));
  const IntSet want = Context::window(ctx.D({ctx.mbar + n}), ctx.mbar, ctx.mbar + ctx.s.b());
  tally.record(got == want, [&] { return ctx.describe("triangle base n=" + std::to_string(n)); });
  return true;
}

inline bool divisibility(Context& ctx, Tally& tally) {
  const Int top = ctx.s.a() * ctx.s.b();
  const Int n = ctx.uniform(0, top - 1);
  const Int np = ctx.uniform(0, top - 1);
  if (ctx.s.is_whole_ground(ctx.s.triangle_base(ctx.mbar, n))) return false;
  const bool got = ctx.s.divides_via_bases(ctx.mbar, np, n);
  tally.record(got == ctx.oracle.contains(n - np), [&] {
    return ctx.describe("divisibility n'=" + std::to_string(np) + " n=" + std::to_string(n));
  });
  return true;
}

/// delta_divisors against the oracle set difference, with or without n3.
inline bool delta(Context& ctx, Tally& tally) {
  const Int a = ctx.s.a(), b = ctx.s.b(), m = ctx.mbar;
  const Int n1 = ctx.random_member(a * b);
  const bool with_n3 = ctx.uniform(0, 3) != 0;
  const Int n3 = ctx.random_vertex(b / 2);
  const int kind = static_cast<int>(ctx.uniform(0, 2));
  Int param = 0;
  sgp::DivisorChange change;
  if (kind == 0) {
    param = ctx.random_vertex(b / 2);
    change = sgp::Middle{param};
  } else {
    param = ctx.uniform(0, 2 * b);
    change = kind == 1 ? sgp::DivisorChange{sgp::Extend{param}} : sgp::DivisorChange{sgp::Multiple{param}};
  }
  IntSet got;
  try {
    got = ctx.s.delta_divisors(m, n1, with_n3 ? std::optional<Int>(n3) : std::nullopt, change);
  } catch (const sgp::Error& e) {
    if (e.code() == sgp::Errc::HypothesisViolated) return false;
    throw;
  }
  IntSet before{m + n1}, after;
  if (kind == 0) after = {m + n1, m + param};
  if (kind == 1) after = {m + n1 + param * a};
  if (kind == 2) after = {m + param * a};
  if (with_n3) {
    before.push_back(m + n3);
    after.push_back(m + n3);
  }
  const IntSet want = sgp::set_difference(ctx.D(sgp::normalized(after)), ctx.D(sgp::normalized(before)));
  tally.record(got == want, [&] {
    return ctx.describe("delta kind=" + std::to_string(kind) + " n1=" + std::to_string(n1) +
                        (with_n3 ? " n3=" + std::to_string(n3) : std::string(" no n3")) +
                        " param=" + std::to_string(param));
  });
  return true;
}

/// The two exchange inequalities for replacing mbar+n2 by mbar+n1+(h2+1)a.
inline bool exchange(Context& ctx, Tally& tally) {
  const Int a = ctx.s.a(), b = ctx.s.b(), m = ctx.mbar;
  const Int n1 = ctx.random_member(a * b);
  const Int n2 = ctx.random_vertex(b / 2);
  const bool with_n3 = ctx.uniform(0, 3) != 0;
  const Int n3 = ctx.random_vertex(b / 2);
  try {
    ctx.s.delta_divisors(m, n1, with_n3 ? std::optional<Int>(n3) : std::nullopt, sgp::Middle{n2});
  } catch (const sgp::Error& e) {
    if (e.code() == sgp::Errc::HypothesisViolated) return false;
    throw;
  }
  const Int h2 = ctx.s.ih_rep(n2).h;
  IntSet old_set{m + n1, m + n2}, new_set{m + n1 + (h2 + 1) * a}, base{m + n1};
  if (with_n3) {
    old_set.push_back(m + n3);
    new_set.push_back(m + n3);
    base.push_back(m + n3);
  }
  const IntSet d_old = ctx.D(sgp::normalized(old_set));
  const IntSet d_new = ctx.D(sgp::normalized(new_set));
  const IntSet d_base = ctx.D(sgp::normalized(base));
  const Int inf = d_old.empty() ? 0 : std::max(d_old.back(), d_new.empty() ? 0 : d_new.back()) + 1;
  const bool capacity = Context::window(d_old, m, inf).size() <= Context::window(d_new, m, inf).size();
  const bool load = Context::window(sgp::set_difference(d_old, d_base), 0, m).size() >=
                    Context::window(sgp::set_difference(d_new, d_base), 0, m).size();
  tally.record(capacity && load, [&] {
    return ctx.describe("exchange n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                        (with_n3 ? " n3=" + std::to_string(n3) : std::string(" no n3")) +
                        (capacity ? "" : " capacity") + (load ? "" : " load"));
  });
  return true;
}

/// For a ≺-chain of 3 or 4 bases, the new divisors of a middle interval
/// only depend on its neighbours and mbar.
inline bool neighbour_locality(Context& ctx, Tally& tally) {
  const Int a = ctx.s.a(), b = ctx.s.b(), m = ctx.mbar;
  const Int t = ctx.uniform(3, 4);
  std::vector<sgp::GroundInterval> chain{ctx.s.triangle_base(m, ctx.random_member(a * b))};
  for (Int j = 1; j < t; ++j) chain.push_back(ctx.s.triangle_base(m, ctx.random_vertex(b / 3)));
  if (ctx.s.interval_indices(chain[0]).front() != 0) return false;
  for (Int j = 0; j + 1 < t; ++j) {
    if (!ctx.s.precedes(chain[static_cast<std::size_t>(j)], chain[static_cast<std::size_t>(j + 1)])) return false;
  }
  // Pairwise the intervals must not meet.
  for (Int x = 0; x < t; ++x) {
    for (Int y = x + 1; y < t; ++y) {
      if (!sgp::set_intersection(ctx.s.interval_elements(m, chain[static_cast<std::size_t>(x)]),
                                 ctx.s.interval_elements(m, chain[static_cast<std::size_t>(y)]))
               .empty()) {
        return false;
      }
    }
  }
  std::vector<IntSet> elems;
  for (const auto& l : chain) elems.push_back(ctx.s.interval_elements(m, l));
  bool ok = true;
  for (Int i = 1; i + 1 < t; ++i) {
    IntSet others, near{m};
    for (Int j = 0; j < t; ++j) {
      if (j == i) continue;
      others = sgp::set_union(others, elems[static_cast<std::size_t>(j)]);
      if (j == i - 1 || j == i + 1) near = sgp::set_union(near, elems[static_cast<std::size_t>(j)]);
    }
    const IntSet own = ctx.D(elems[static_cast<std::size_t>(i)]);
    ok = ok && sgp::set_difference(own, ctx.D(others)) == sgp::set_difference(own, ctx.D(sgp::normalized(near)));
  }
  tally.record(ok, [&] { return ctx.describe("neighbour locality t=" + std::to_string(t)); });
  return true;
}

using Check = bool (*)(Context&, Tally&);

struct Suite {
  const char* name;
  Check check;
  Tally tally;
};

inline std::vector<Suite> lemma_suites() {
  return {{"betweenness", betweenness, {}},
          {"triangle-bases", triangle_bases, {}},
          {"divisibility-via-bases", divisibility, {}},
          {"delta-divisors", delta, {}},
          {"exchange-inequalities", exchange, {}},
          {"neighbour-locality", neighbour_locality, {}}};
}

/// Draws until every suite holds `per_suite` valid instances (or
/// `max_draws` draws per suite are spent). Pairs satisfy ab <= max_product.
inline void run_suites(std::vector<Suite>& suites, long per_suite, Int max_product, std::uint64_t seed,
                       long max_draws) {
  std::mt19937_64 rng(seed);
  const auto pairs = coprime_pairs(max_product);
  for (auto& suite : suites) {
    long draws = 0;
    while (suite.tally.checked < per_suite && draws < max_draws) {
      const Pair p = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
      Context ctx(p, rng);
      // Several draws per context amortize the oracle table.
      for (int k = 0; k < 20 && suite.tally.checked < per_suite; ++k, ++draws) suite.check(ctx, suite.tally);
    }
  }
}

}  // namespace checks
