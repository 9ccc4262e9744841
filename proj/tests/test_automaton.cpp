#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cocoa/automaton.hpp"
#include "cocoa/families.hpp"
#include "cocoa/sampling.hpp"
#include "oracles.hpp"

using namespace cocoa;

namespace {

Automaton one_state_all_accepting() {
  Alphabet sigma({"a", "b"});
  return Automaton(sigma, {"q0"}, 0, {{0, 0, 0, 2}, {0, 1, 0, 2}});
}

}  // namespace

TEST_CASE("alphabet rejects duplicates and empty names") {
  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", ""}), std::invalid_argument);
  Alphabet sigma({"b", "a"});
  CHECK(sigma.index_of("a") == 1);
  CHECK(sigma.index_of("z") == -1);
}

TEST_CASE("validate: complete deterministic singleton") {
  CHECK(validate(one_state_all_accepting()).empty());
}

TEST_CASE("validate: generated two-state chain element") {
  const Cocoa lk = gen_lk(2);
  CHECK(validate(lk.elements()[0]).empty());
  CHECK(lk.elements()[0].deterministic());
  CHECK(lk.elements()[0].cobuchi());
}

TEST_CASE("validate: missing transition is reported with its state and letter") {
  Alphabet sigma({"a", "b"});
  Automaton a(sigma, {"q0"}, 0, {{0, 0, 0, 2}});  // (q0, b) missing
  const auto vs = validate(a);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].rule == "incomplete");
  CHECK(vs[0].state == "q0");
  CHECK(vs[0].letter == "b");
  CHECK_FALSE(a.valid());
}

TEST_CASE("validate: conflicting colors per cell are reported") {
  Alphabet sigma({"a"});
  Automaton a(sigma, {"q0", "q1"}, 0, {{0, 0, 0, 1}, {0, 0, 1, 2}, {1, 0, 1, 2}});
  const auto vs = validate(a);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].rule == "color-conflict");
  CHECK(vs[0].state == "q0");
  CHECK_FALSE(a.color_functional());
}

TEST_CASE("run_deterministic on the four-state parity fixture") {
  const Automaton fig2 = gen_fig2();
  const auto r = run_deterministic(fig2, make_lasso(fig2.alphabet(), {}, {"x1", "y1"}));
  CHECK(r.dominating_color == 0);
  CHECK(r.accepted);
}

TEST_CASE("run_deterministic on a single accepting state") {
  const Automaton a = one_state_all_accepting();
  const auto r = run_deterministic(a, make_lasso(a.alphabet(), {"a"}, {"b", "a"}));
  CHECK(r.dominating_color == 2);
  CHECK(r.accepted);
  CHECK(r.cycle_states == std::vector<int>{0});
}

TEST_CASE("run_deterministic on the explicit parity family") {
  const Automaton p2 = gen_pk(2);
  const auto r = run_deterministic(p2, make_lasso(p2.alphabet(), {"X1"}, {"a7"}));
  CHECK(r.dominating_color == 0);
  CHECK(r.accepted);
}

TEST_CASE("run_deterministic rejects bad inputs") {
  const Automaton ncw = gen_ncw_fixture();
  CHECK_THROWS_AS(run_deterministic(ncw, make_lasso(ncw.alphabet(), {}, {"a"})),
                  std::invalid_argument);
  Alphabet sigma({"a"});
  Automaton incomplete(sigma, {"q0", "q1"}, 0, {{0, 0, 1, 2}});
  CHECK_THROWS_AS(run_deterministic(incomplete, LassoWord{{}, {0}}), std::invalid_argument);
}

TEST_CASE("existential acceptance on the example chain elements") {
  const Cocoa fig1 = gen_fig1();
  const Automaton& a2 = fig1.elements()[1];
  const Automaton& a3 = fig1.elements()[2];
  CHECK_FALSE(a2.deterministic());
  const LassoWord bc = make_lasso(fig1.alphabet(), {}, {"b", "c"});
  CHECK(accepts_lasso_cobuchi(a2, bc));
  CHECK_FALSE(accepts_lasso_cobuchi(a3, bc));
}

TEST_CASE("accepts_lasso_cobuchi rejects parity input") {
  const Automaton fig2 = gen_fig2();
  CHECK_THROWS_AS(accepts_lasso_cobuchi(fig2, make_lasso(fig2.alphabet(), {}, {"x1"})),
                  std::invalid_argument);
}

TEST_CASE("deterministic co-Buchi: existential acceptance equals the direct run") {
  std::mt19937 rng(default_seed() + 11);
  for (int i = 0; i < 60; ++i) {
    const Automaton a = oracles::random_dcw(rng, 6, 3);
    for_each_lasso(all_letters(a.alphabet()), 3, 4, [&](const LassoWord& w) {
      CHECK(accepts_lasso_cobuchi(a, w) == run_deterministic(a, w).accepted);
    });
  }
}

TEST_CASE("dominating color matches the long-run simulation oracle") {
  std::mt19937 rng(default_seed() + 12);
  for (int i = 0; i < 80; ++i) {
    const Automaton a = oracles::random_deterministic(rng, 6, 3, 4);
    for_each_lasso(all_letters(a.alphabet()), 2, 4, [&](const LassoWord& w) {
      const auto r = run_deterministic(a, w);
      CHECK(r.dominating_color == oracles::dominating_color(a, w));
      CHECK(r.dominating_color == run_dominating_color(a, w));
    });
  }
}

TEST_CASE("run results are invariant under lasso rotation re-encoding") {
  std::mt19937 rng(default_seed() + 13);
  for (int i = 0; i < 60; ++i) {
    const Automaton a = oracles::random_deterministic(rng, 5, 3, 3);
    for_each_lasso(all_letters(a.alphabet()), 2, 3, [&](const LassoWord& w) {
      LassoWord rolled;
      rolled.stem = w.stem;
      rolled.stem.insert(rolled.stem.end(), w.period.begin(), w.period.end());
      rolled.period = w.period;
      const auto r1 = run_deterministic(a, w);
      const auto r2 = run_deterministic(a, rolled);
      CHECK(r1.dominating_color == r2.dominating_color);
      CHECK(r1.accepted == r2.accepted);
    });
  }
}
