#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocoa/analysis.hpp"
#include "cocoa/automaton.hpp"
#include "cocoa/families.hpp"
#include "cocoa/textio.hpp"

using namespace cocoa;

namespace {

Document document_of(const GenOutput& g) {
  Document d;
  for (const auto& [n, a] : g.automata) d.automata.emplace_back(n, a);
  for (const auto& c : g.chains) d.chains.push_back({c.name, c.element_names});
  return d;
}

}  // namespace

TEST_CASE("print/parse round trip keeps the language and the structure") {
  Document doc;
  doc.automata.emplace_back("fig2", gen_fig2());
  const std::string text = print_document(doc);
  const Document back = parse_document(text);
  REQUIRE(back.automata.size() == 1);
  CHECK(back.automata[0].first == "fig2");
  CHECK(structurally_equal(back.automata[0].second, gen_fig2()));
  CHECK(dpw_equiv(back.automata[0].second, gen_fig2()).equivalent);
  CHECK(print_document(back) == text);
}

TEST_CASE("round trip across every generated family") {
  const FamilySpec specs[] = {{"fig1", 1}, {"minparity", 3},   {"Ck", 3},    {"Lk", 2},
                              {"Lhat", 2}, {"comp_family", 2}, {"L0hat", 2}, {"Pk", 3},
                              {"ncw_fixture", 1}};
  for (const auto& spec : specs) {
    const Document doc = document_of(gen(spec));
    const std::string text = print_document(doc);
    const Document back = parse_document(text);
    REQUIRE(back.automata.size() == doc.automata.size());
    for (std::size_t i = 0; i < doc.automata.size(); ++i) {
      CHECK(back.automata[i].first == doc.automata[i].first);
      CHECK(structurally_equal(back.automata[i].second, doc.automata[i].second));
    }
    REQUIRE(back.chains.size() == doc.chains.size());
    CHECK(print_document(back) == text);
  }
}

TEST_CASE("golden serialization of the two-level toggle chain") {
  const std::string expected = R"(aut L2_1
alphabet: X1 X2 Y1 Y2 a0 a1 a2 a3 a4 a5 a6 a7
states: q0 q1
initial: q0
q0 X1 -> q1 : 1
q0 X2 -> q0 : 1
q0 Y1 -> q0 : 1
q0 Y2 -> q0 : 1
q0 a0 -> q0 : 2
q0 a1 -> q0 : 2
q0 a2 -> q0 : 2
q0 a3 -> q0 : 2
q0 a4 -> q0 : 2
q0 a5 -> q0 : 2
q0 a6 -> q0 : 2
q0 a7 -> q0 : 2
q1 X1 -> q0 : 1
q1 X2 -> q1 : 1
q1 Y1 -> q1 : 1
q1 Y2 -> q1 : 1
q1 a0 -> q1 : 2
q1 a1 -> q1 : 2
q1 a2 -> q1 : 2
q1 a3 -> q1 : 2
q1 a4 -> q1 : 2
q1 a5 -> q1 : 2
q1 a6 -> q1 : 2
q1 a7 -> q1 : 1
end
aut L2_2
alphabet: X1 X2 Y1 Y2 a0 a1 a2 a3 a4 a5 a6 a7
states: q0 q1
initial: q0
q0 X1 -> q0 : 1
q0 X2 -> q1 : 1
q0 Y1 -> q0 : 1
q0 Y2 -> q0 : 1
q0 a0 -> q0 : 2
q0 a1 -> q0 : 2
q0 a2 -> q0 : 2
q0 a3 -> q0 : 2
q0 a4 -> q0 : 2
q0 a5 -> q0 : 2
q0 a6 -> q0 : 1
q0 a7 -> q0 : 1
q1 X1 -> q1 : 1
q1 X2 -> q0 : 1
q1 Y1 -> q1 : 1
q1 Y2 -> q1 : 1
q1 a0 -> q1 : 2
q1 a1 -> q1 : 2
q1 a2 -> q1 : 2
q1 a3 -> q1 : 2
q1 a4 -> q1 : 2
q1 a5 -> q1 : 1
q1 a6 -> q1 : 1
q1 a7 -> q1 : 1
end
cocoa L2 = L2_1 L2_2
)";
  CHECK(print_document(document_of(gen({"Lk", 2}))) == expected);
}

TEST_CASE("states print breadth-first from the initial state") {
  Alphabet sigma({"a"});
  // declared order q1, q0 with initial q0: printing must start at q0
  Automaton a(sigma, {"q1", "q0"}, 1, {{0, 0, 1, 2}, {1, 0, 0, 2}});
  const std::string text = print_automaton("t", a);
  CHECK(text.find("states: q0 q1") != std::string::npos);
}

TEST_CASE("unreachable states survive the round trip after the reachable ones") {
  Alphabet sigma({"a"});
  Automaton a(sigma, {"dead", "q0"}, 1, {{0, 0, 0, 1}, {1, 0, 1, 2}});
  const std::string text = print_automaton("t", a);
  CHECK(text.find("states: q0 dead") != std::string::npos);
  Document back = parse_document(text);
  CHECK(structurally_equal(back.automata[0].second, a));
}

TEST_CASE("parse errors carry line numbers") {
  const std::string missing_state = R"(aut bad
alphabet: a
states: q0
initial: q0
q0 a -> q9 : 2
end
)";
  try {
    parse_document(missing_state);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
    CHECK(std::string(e.what()).find("q9") != std::string::npos);
  }

  const std::string unknown_letter = R"(aut bad
alphabet: a
states: q0
initial: q0
q0 b -> q0 : 2
end
)";
  CHECK_THROWS_AS(parse_document(unknown_letter), ParseError);

  const std::string color_conflict = R"(aut bad
alphabet: a
states: q0 q1
initial: q0
q0 a -> q0 : 1
q0 a -> q1 : 2
q1 a -> q1 : 2
end
)";
  try {
    parse_document(color_conflict);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 6);
  }

  const std::string missing_section = R"(aut bad
alphabet: a
initial: q0
end
)";
  CHECK_THROWS_AS(parse_document(missing_section), ParseError);

  const std::string unknown_chain_element = R"(aut a1
alphabet: a
states: q0
initial: q0
q0 a -> q0 : 2
end
cocoa c = a1 a2
)";
  CHECK_THROWS_AS(parse_document(unknown_chain_element), ParseError);

  CHECK_THROWS_AS(parse_document("cocoa c a1 a2\n"), ParseError);
  CHECK_THROWS_AS(parse_document("aut t\nalphabet: a\nstates: q0\ninitial: q0\n"), ParseError);
  const std::string duplicate_name = R"(aut t
alphabet: a
states: q0
initial: q0
q0 a -> q0 : 2
end
aut t
alphabet: a
states: q0
initial: q0
q0 a -> q0 : 2
end
)";
  CHECK_THROWS_AS(parse_document(duplicate_name), ParseError);
}

TEST_CASE("same-color duplicate targets are nondeterminism, not an error") {
  const std::string ncw = R"(aut n
alphabet: a
states: q0 q1
initial: q0
q0 a -> q0 : 2
q0 a -> q1 : 2
q1 a -> q1 : 1
end
)";
  const Document doc = parse_document(ncw);
  CHECK_FALSE(doc.automata[0].second.deterministic());
  CHECK(doc.automata[0].second.cobuchi());
}

TEST_CASE("lasso literals parse and print") {
  Alphabet sigma({"x1", "y1"});
  const LassoWord w = parse_lasso("x1 ; y1 x1", sigma);
  CHECK(w.stem == std::vector<int>{0});
  CHECK(w.period == std::vector<int>{1, 0});
  CHECK(format_lasso(w, sigma) == "x1 ; y1 x1");

  const LassoWord e = parse_lasso("; y1", sigma);
  CHECK(e.stem.empty());
  CHECK(format_lasso(e, sigma) == "; y1");
  CHECK(parse_lasso(format_lasso(w, sigma), sigma) == w);

  CHECK_THROWS_AS(parse_lasso("x1 y1", sigma), std::invalid_argument);
  CHECK_THROWS_AS(parse_lasso("x1 ;", sigma), std::invalid_argument);
  CHECK_THROWS_AS(parse_lasso("; zz", sigma), std::invalid_argument);
}

TEST_CASE("comments and blank lines are ignored") {
  const std::string text = R"(# a comment

aut t
# another comment
alphabet: a
states: q0
initial: q0
q0 a -> q0 : 2
end
)";
  const Document doc = parse_document(text);
  CHECK(doc.automata.size() == 1);
}
