#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cocoa/analysis.hpp"
#include "cocoa/automaton.hpp"
#include "cocoa/boolops.hpp"
#include "cocoa/chain.hpp"
#include "cocoa/families.hpp"
#include "cocoa/sampling.hpp"
#include "oracles.hpp"

using namespace cocoa;

TEST_CASE("scc_decompose: the two-state chain element is one component") {
  const Automaton a = gen_lk(2).elements()[0];
  const auto sccs = scc_decompose(a);
  REQUIRE(sccs.size() == 1);
  CHECK(sccs[0].states == std::vector<int>{0, 1});
}

TEST_CASE("scc_decompose: self-loop singleton") {
  Alphabet sigma({"a", "b"});
  Automaton a(sigma, {"q0", "q1"}, 0, {{0, 0, 0, 2}, {0, 1, 1, 2}, {1, 0, 1, 2}, {1, 1, 1, 2}});
  const auto sccs = scc_decompose(a);
  REQUIRE(sccs.size() == 2);
  CHECK(sccs[0].states == std::vector<int>{0});
  CHECK(sccs[0].transitions.size() == 1);
  CHECK(sccs[1].states == std::vector<int>{1});
}

TEST_CASE("scc_decompose: trivial components without self-loops are dropped") {
  Alphabet sigma({"a"});
  Automaton a(sigma, {"q0", "q1"}, 0, {{0, 0, 1, 2}, {1, 0, 1, 2}});
  const auto sccs = scc_decompose(a);
  REQUIRE(sccs.size() == 1);
  CHECK(sccs[0].states == std::vector<int>{1});
}

TEST_CASE("scc_decompose: the parity fixture is one four-state component") {
  const auto sccs = scc_decompose(gen_fig2());
  REQUIRE(sccs.size() == 1);
  CHECK(sccs[0].states.size() == 4);
  CHECK(sccs[0].transitions.size() == gen_fig2().transitions().size());
}

TEST_CASE("parity_to_streett: no odd colors, no pairs") {
  Alphabet sigma({"a"});
  Automaton a(sigma, {"q0"}, 0, {{0, 0, 0, 2}});
  CHECK(parity_to_streett(a).empty());
}

TEST_CASE("parity_to_streett: a co-Buchi automaton yields one pair with empty U") {
  const Automaton a = gen_lk(2).elements()[0];
  const auto pairs = parity_to_streett(a);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].U.empty());
  int rejecting = 0;
  for (const auto& t : a.transitions())
    if (t.color == 1) ++rejecting;
  CHECK(static_cast<int>(pairs[0].L.size()) == rejecting);
}

TEST_CASE("parity_to_streett on the parity fixture") {
  const Automaton fig2 = gen_fig2();
  const auto pairs = parity_to_streett(fig2);
  REQUIRE(pairs.size() == 1);
  int c0 = 0, c1 = 0;
  for (const auto& t : fig2.transitions()) {
    if (t.color == 0) ++c0;
    if (t.color == 1) ++c1;
  }
  CHECK(static_cast<int>(pairs[0].L.size()) == c1);
  CHECK(static_cast<int>(pairs[0].U.size()) == c0);
}

TEST_CASE("streett_nonempty without pairs returns a replayable witness") {
  const Automaton fig2 = gen_fig2();
  const auto w = streett_nonempty(fig2, {});
  REQUIRE(w.has_value());
  CHECK_NOTHROW(run_deterministic(fig2, *w));
}

TEST_CASE("streett_nonempty on a chain element finds an accepting lasso") {
  const Automaton a = gen_lk(4).elements()[0];
  const auto w = streett_nonempty(a, parity_to_streett(a));
  REQUIRE(w.has_value());
  CHECK(run_deterministic(a, *w).dominating_color == 2);
}

TEST_CASE("streett_nonempty detects emptiness when every cycle is rejecting") {
  Alphabet sigma({"a"});
  Automaton a(sigma, {"q0"}, 0, {{0, 0, 0, 1}});
  CHECK_FALSE(streett_nonempty(a, parity_to_streett(a)).has_value());
}

TEST_CASE("difference of an automaton with itself is empty") {
  const Automaton fig2 = gen_fig2();
  CHECK_FALSE(dpw_diff_nonempty(fig2, fig2).has_value());
}

TEST_CASE("difference against the complement recovers the language") {
  const Automaton fig2 = gen_fig2();
  const Automaton neg = dpw_complement(fig2);
  const auto w = dpw_diff_nonempty(fig2, neg);
  REQUIRE(w.has_value());
  CHECK(run_accepted(fig2, *w));
  CHECK_FALSE(run_accepted(neg, *w));
}

TEST_CASE("chain element languages strictly fall") {
  const Cocoa lk = gen_lk(2);
  const auto w = dpw_diff_nonempty(lk.elements()[0], lk.elements()[1]);
  REQUIRE(w.has_value());
  CHECK(run_accepted(lk.elements()[0], *w));
  CHECK_FALSE(run_accepted(lk.elements()[1], *w));
  // the chain falls, so the reverse difference is empty
  CHECK_FALSE(dpw_diff_nonempty(lk.elements()[1], lk.elements()[0]).has_value());
}

TEST_CASE("equivalence of the generated product with the drawn fixture") {
  CHECK(dpw_equiv(cocoa_to_dpw(gen_ck(2)), gen_fig2()).equivalent);
}

TEST_CASE("equivalence returns a replayable counterexample") {
  const Automaton fig2 = gen_fig2();
  const auto r = dpw_equiv(fig2, dpw_complement(fig2));
  CHECK_FALSE(r.equivalent);
  REQUIRE(r.counterexample.has_value());
  CHECK(run_accepted(fig2, *r.counterexample) !=
        run_accepted(dpw_complement(fig2), *r.counterexample));
}

TEST_CASE("equivalence behaves as an equivalence relation on a pool") {
  std::mt19937 rng(default_seed() + 31);
  // one shared alphabet so every pair is comparable
  std::vector<Automaton> pool;
  while (pool.size() < 10) {
    Automaton a = oracles::random_deterministic(rng, 4, 2, 3);
    if (a.alphabet().size() == 2) pool.push_back(std::move(a));
  }
  std::vector<std::vector<bool>> eq(pool.size(), std::vector<bool>(pool.size(), false));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) eq[i][j] = dpw_equiv(pool[i], pool[j]).equivalent;
  bool any_equivalent_pair = false;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    CHECK(eq[i][i]);
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (i != j && eq[i][j]) any_equivalent_pair = true;
      CHECK(eq[i][j] == eq[j][i]);
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
    }
  }
  (void)any_equivalent_pair;  // small random DPWs often all differ; that is fine
}

TEST_CASE("residual classes of the explicit parity family") {
  CHECK(residual_classes(gen_pk(3)).size() == 8);
}

TEST_CASE("single residual language of the x/y chain product") {
  CHECK(residual_classes(cocoa_to_dpw(gen_ck(3))).size() == 1);
}

TEST_CASE("residual classes of a one-state automaton") {
  Alphabet sigma({"a"});
  Automaton a(sigma, {"q0"}, 0, {{0, 0, 0, 2}});
  CHECK(residual_classes(a).size() == 1);
}

TEST_CASE("residual classes partition the reachable states into equivalent groups") {
  std::mt19937 rng(default_seed() + 32);
  for (int i = 0; i < 10; ++i) {
    const Automaton a = oracles::random_deterministic(rng, 5, 2, 3);
    const auto classes = residual_classes(a);
    std::size_t total = 0;
    for (const auto& cls : classes) {
      total += cls.size();
      for (std::size_t j = 1; j < cls.size(); ++j)
        CHECK(dpw_equiv(a.rebased(cls[0]), a.rebased(cls[j])).equivalent);
    }
    CHECK(total == a.reachable().size());
    for (std::size_t x = 0; x < classes.size(); ++x)
      for (std::size_t y = x + 1; y < classes.size(); ++y)
        CHECK_FALSE(dpw_equiv(a.rebased(classes[x][0]), a.rebased(classes[y][0])).equivalent);
  }
}

TEST_CASE("closed sub-SCCs: the full alphabet of a strongly connected automaton") {
  const Automaton fig2 = gen_fig2();
  const auto sccs = closed_subsccs(fig2, all_letters(fig2.alphabet()));
  REQUIRE(sccs.size() == 1);
  CHECK(sccs[0].states.size() == 4);
}

TEST_CASE("closed sub-SCCs: the two lemma letter sets split the product in half") {
  const Automaton d = cocoa_to_dpw(gen_ck(2));
  const Alphabet& sig = d.alphabet();
  auto ids = [&](std::vector<std::string> names) {
    std::vector<int> out;
    for (const auto& n : names) out.push_back(sig.index_of(n));
    return out;
  };
  const auto s1 = closed_subsccs(d, ids({"x2", "x3", "y1", "y2", "y3"}));
  const auto s2 = closed_subsccs(d, ids({"x1", "x2", "x3", "y2", "y3"}));
  REQUIRE(s1.size() == 1);
  REQUIRE(s2.size() == 1);
  CHECK(s1[0].states.size() == 2);
  CHECK(s2[0].states.size() == 2);
  for (int q : s1[0].states)
    for (int r : s2[0].states) CHECK(q != r);
}

TEST_CASE("closed sub-SCCs: empty letter subset yields nothing") {
  CHECK(closed_subsccs(gen_fig2(), {}).empty());
}

TEST_CASE("emptiness engine: witnesses replay, empty verdicts survive exhaustive search") {
  std::mt19937 rng(default_seed() + 33);
  for (int i = 0; i < 60; ++i) {
    const Automaton a = oracles::random_deterministic(rng, 5, 3, 3);
    std::vector<StreettPair> pairs;
    const int np = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int p = 0; p < np; ++p) {
      const bool dense_l = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
      const bool no_u = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
      StreettPair sp;
      for (int t = 0; t < static_cast<int>(a.transitions().size()); ++t) {
        const int l_roll = std::uniform_int_distribution<int>(0, 3)(rng);
        if (dense_l ? l_roll <= 2 : l_roll == 0) sp.L.push_back(t);
        const int u_roll = std::uniform_int_distribution<int>(0, 3)(rng);
        if (!no_u && u_roll == 0) sp.U.push_back(t);
      }
      pairs.push_back(std::move(sp));
    }
    const auto w = streett_nonempty(a, pairs);  // replays internally when nonempty
    if (!w) CHECK_FALSE(oracles::streett_satisfiable_bounded(a, pairs, 6));
  }
}
