#pragma once

// Bit-stable generators for every automaton and chain family used by the
// toolkit, plus the fixed figure fixtures. Letter naming follows the sources
// the families come from (x-block, then y-block, then a-block ascending);
// state naming schemes are documented per generator so serialized fixtures
// are reproducible.

#include <string>
#include <utility>
#include <vector>

#include "cocoa/automaton.hpp"
#include "cocoa/chain.hpp"

namespace cocoa {

// Three-element example chain over {a, b, c}: one universal-ish level-1
// automaton, a nondeterministic level-2 automaton, and a deterministic
// level-3 automaton tracking the parity of the number of a letters.
inline Cocoa gen_fig1() {
  Alphabet sigma({"a", "b", "c"});
  const int a = 0, b = 1, c = 2;

  Automaton a1(sigma, {"q0"}, 0,
               {{0, a, 0, 1}, {0, b, 0, 2}, {0, c, 0, 2}});

  Automaton a2(sigma, {"q1", "q2"}, 0,
               {{0, a, 0, 1},
                {0, b, 1, 2},
                {0, c, 0, 2},
                {1, a, 1, 1},
                {1, a, 0, 1},
                {1, b, 1, 1},
                {1, b, 0, 1},
                {1, c, 0, 2}});

  Automaton a3(sigma, {"q3", "q4"}, 0,
               {{0, a, 1, 1},
                {0, b, 0, 1},
                {0, c, 0, 2},
                {1, a, 0, 1},
                {1, b, 1, 1},
                {1, c, 1, 1}});

  return Cocoa({a1, a2, a3});
}

// Four-state parity automaton over {x1..x3, y1..y3}.
inline Automaton gen_fig2() {
  Alphabet sigma({"x1", "x2", "x3", "y1", "y2", "y3"});
  const int x1 = 0, x2 = 1, x3 = 2, y1 = 3, y2 = 4, y3 = 5;
  std::vector<Transition> ts = {
      {0, x1, 1, 0}, {0, x2, 0, 2}, {0, x3, 0, 2}, {0, y1, 2, 1}, {0, y2, 2, 1}, {0, y3, 0, 2},
      {1, x1, 1, 2}, {1, x2, 1, 2}, {1, x3, 1, 2}, {1, y1, 2, 0}, {1, y2, 3, 1}, {1, y3, 1, 2},
      {2, x1, 1, 0}, {2, x2, 0, 1}, {2, x3, 2, 2}, {2, y1, 2, 2}, {2, y2, 2, 2}, {2, y3, 2, 2},
      {3, x1, 1, 1}, {3, x2, 1, 1}, {3, x3, 3, 2}, {3, y1, 2, 0}, {3, y2, 3, 2}, {3, y3, 3, 2}};
  return Automaton(sigma, {"q0", "q1", "q2", "q3"}, 0, std::move(ts));
}

inline Alphabet minparity_alphabet(int k) {
  std::vector<std::string> ls;
  for (int v = 1; v <= k; ++v) ls.push_back(std::to_string(v));
  return Alphabet(std::move(ls));
}

// One-state parity automaton whose self-loop colors equal the letters.
inline Automaton gen_minparity_dpw(int k) {
  if (k < 1) throw std::invalid_argument("gen_minparity_dpw: k must be positive");
  Alphabet sigma = minparity_alphabet(k);
  std::vector<Transition> ts;
  for (int l = 0; l < k; ++l) ts.push_back({0, l, 0, l + 1});
  return Automaton(std::move(sigma), {"q0"}, 0, std::move(ts));
}

// Chain of k one-state automata: level i rejects exactly the letters below i.
inline Cocoa gen_minparity_chain(int k) {
  if (k < 1) throw std::invalid_argument("gen_minparity_chain: k must be positive");
  Alphabet sigma = minparity_alphabet(k);
  std::vector<Automaton> elems;
  for (int i = 1; i <= k; ++i) {
    std::vector<Transition> ts;
    for (int l = 0; l < k; ++l) ts.push_back({0, l, 0, l + 1 < i ? 1 : 2});
    elems.emplace_back(sigma, std::vector<std::string>{"q0"}, 0, std::move(ts));
  }
  return Cocoa(std::move(elems));
}

// Chain of k two-state automata over {x1..x_{k+1}, y1..y_{k+1}}: element j
// toggles q0 -> q1 on x1..xj and back on y1..yj, rejecting; everything else
// self-loops accepting.
inline Cocoa gen_ck(int k) {
  if (k < 1) throw std::invalid_argument("gen_ck: k must be positive");
  std::vector<std::string> ls;
  for (int m = 1; m <= k + 1; ++m) ls.push_back("x" + std::to_string(m));
  for (int m = 1; m <= k + 1; ++m) ls.push_back("y" + std::to_string(m));
  Alphabet sigma(std::move(ls));
  auto x = [&](int m) { return m - 1; };
  auto y = [&](int m) { return k + m; };

  std::vector<Automaton> elems;
  for (int j = 1; j <= k; ++j) {
    std::vector<Transition> ts;
    for (int m = 1; m <= k + 1; ++m) {
      if (m <= j) {
        ts.push_back({0, x(m), 1, 1});
        ts.push_back({1, y(m), 0, 1});
      } else {
        ts.push_back({0, x(m), 0, 2});
        ts.push_back({1, y(m), 1, 2});
      }
      ts.push_back({0, y(m), 0, 2});
      ts.push_back({1, x(m), 1, 2});
    }
    elems.emplace_back(sigma, std::vector<std::string>{"q0", "q1"}, 0, std::move(ts));
  }
  return Cocoa(std::move(elems));
}

inline Alphabet lk_alphabet(int k) {
  std::vector<std::string> ls;
  for (int i = 1; i <= k; ++i) ls.push_back("X" + std::to_string(i));
  for (int i = 1; i <= k; ++i) ls.push_back("Y" + std::to_string(i));
  for (int j = 0; j < 4 * k; ++j) ls.push_back("a" + std::to_string(j));
  return Alphabet(std::move(ls));
}

// Chain of k two-state automata over {X1..Xk, Y1..Yk, a0..a_{4k-1}}: element
// i toggles on X_i; the a-letters accepted at q0 reach one index further
// than at q1.
inline Cocoa gen_lk(int k) {
  if (k < 1) throw std::invalid_argument("gen_lk: k must be positive");
  Alphabet sigma = lk_alphabet(k);
  auto X = [&](int i) { return i - 1; };
  auto Y = [&](int i) { return k + i - 1; };
  auto A = [&](int j) { return 2 * k + j; };

  std::vector<Automaton> elems;
  for (int i = 1; i <= k; ++i) {
    std::vector<Transition> ts;
    for (int m = 1; m <= k; ++m) {
      if (m == i) {
        ts.push_back({0, X(m), 1, 1});
        ts.push_back({1, X(m), 0, 1});
      } else {
        ts.push_back({0, X(m), 0, 1});
        ts.push_back({1, X(m), 1, 1});
      }
      ts.push_back({0, Y(m), 0, 1});
      ts.push_back({1, Y(m), 1, 1});
    }
    for (int j = 0; j < 4 * k; ++j) {
      ts.push_back({0, A(j), 0, j <= 4 * k - 2 * i + 1 ? 2 : 1});
      ts.push_back({1, A(j), 1, j <= 4 * k - 2 * i ? 2 : 1});
    }
    elems.emplace_back(sigma, std::vector<std::string>{"q0", "q1"}, 0, std::move(ts));
  }
  return Cocoa(std::move(elems));
}

// gen_lk under the substitution X_i <-> Y_i and a_j <-> a_{4k-j-1}.
inline Cocoa gen_lhat(int k) {
  if (k < 1) throw std::invalid_argument("gen_lhat: k must be positive");
  Alphabet sigma = lk_alphabet(k);
  auto X = [&](int i) { return i - 1; };
  auto Y = [&](int i) { return k + i - 1; };
  auto A = [&](int j) { return 2 * k + j; };

  std::vector<Automaton> elems;
  for (int i = 1; i <= k; ++i) {
    std::vector<Transition> ts;
    for (int m = 1; m <= k; ++m) {
      if (m == i) {
        ts.push_back({0, Y(m), 1, 1});
        ts.push_back({1, Y(m), 0, 1});
      } else {
        ts.push_back({0, Y(m), 0, 1});
        ts.push_back({1, Y(m), 1, 1});
      }
      ts.push_back({0, X(m), 0, 1});
      ts.push_back({1, X(m), 1, 1});
    }
    for (int j = 0; j < 4 * k; ++j) {
      ts.push_back({0, A(j), 0, j >= 2 * i - 2 ? 2 : 1});
      ts.push_back({1, A(j), 1, j >= 2 * i - 1 ? 2 : 1});
    }
    elems.emplace_back(sigma, std::vector<std::string>{"q0", "q1"}, 0, std::move(ts));
  }
  return Cocoa(std::move(elems));
}

// Explicit 2^k-state parity automaton for the language of gen_lk: states are
// bit vectors (named s<b_1...b_k>), X_i flips bit i, and the colors follow
// the five-case rule on the a-letters.
inline Automaton gen_pk(int k) {
  if (k < 1) throw std::invalid_argument("gen_pk: k must be positive");
  Alphabet sigma = lk_alphabet(k);
  auto X = [&](int i) { return i - 1; };
  auto Y = [&](int i) { return k + i - 1; };
  auto A = [&](int j) { return 2 * k + j; };

  const int n = 1 << k;
  std::vector<std::string> names;
  for (int s = 0; s < n; ++s) {
    std::string nm = "s";
    for (int i = 1; i <= k; ++i) nm += (s >> (i - 1) & 1) ? '1' : '0';
    names.push_back(std::move(nm));
  }
  std::vector<Transition> ts;
  for (int s = 0; s < n; ++s) {
    for (int i = 1; i <= k; ++i) {
      ts.push_back({s, X(i), s ^ (1 << (i - 1)), 0});
      ts.push_back({s, Y(i), s, 0});
    }
    for (int j = 0; j < 4 * k; ++j) {
      int color;
      if (j >= 2 * k && j % 2 == 0) {
        color = (4 * k - j) / 2;
      } else if (j >= 2 * k + 1 && j % 2 == 1) {
        const int i = (4 * k + 1 - j) / 2;
        color = (s >> (i - 1) & 1) ? i - 1 : i;
      } else {
        color = k;
      }
      ts.push_back({s, A(j), s, color});
    }
  }
  return Automaton(std::move(sigma), std::move(names), 0, std::move(ts));
}

inline Alphabet comp_alphabet(int k) {
  std::vector<std::string> ls;
  for (int i = 1; i <= k; ++i) ls.push_back("X" + std::to_string(i));
  for (int i = 1; i <= k; ++i) ls.push_back("Y" + std::to_string(i));
  for (int m = 1; m <= 2 * k + 1; ++m) ls.push_back("a" + std::to_string(m));
  return Alphabet(std::move(ls));
}

// Chain (A_1 ... A_{k+1}) over {X1..Xk, Y1..Yk, a1..a_{2k+1}}: one-state
// A_1 rejecting exactly the X letters; each later A_i hands off q0 -> q1 on
// the first Y_{i-1} and q1 -> q2 on a following X_{i-1}, with the accepted
// a-range shrinking by one at q2.
inline Cocoa gen_comp_family(int k) {
  if (k < 1) throw std::invalid_argument("gen_comp_family: k must be positive");
  Alphabet sigma = comp_alphabet(k);
  auto X = [&](int i) { return i - 1; };
  auto Y = [&](int i) { return k + i - 1; };
  auto A = [&](int m) { return 2 * k + m - 1; };

  std::vector<Automaton> elems;
  {
    std::vector<Transition> ts;
    for (int i = 1; i <= k; ++i) {
      ts.push_back({0, X(i), 0, 1});
      ts.push_back({0, Y(i), 0, 2});
    }
    for (int m = 1; m <= 2 * k + 1; ++m) ts.push_back({0, A(m), 0, 2});
    elems.emplace_back(sigma, std::vector<std::string>{"q0"}, 0, std::move(ts));
  }
  for (int i = 2; i <= k + 1; ++i) {
    const int acc01 = 2 * k - 2 * i + 4;  // a_m accepting at q0/q1 iff m <= acc01
    const int acc2 = 2 * k - 2 * i + 3;
    std::vector<Transition> ts;
    for (int m = 1; m <= k; ++m) {
      ts.push_back({0, X(m), 0, 1});
      ts.push_back({1, X(m), m == i - 1 ? 2 : 1, 1});
      ts.push_back({2, X(m), 2, 1});
      ts.push_back({0, Y(m), m == i - 1 ? 1 : 0, m == i - 1 ? 1 : 2});
      ts.push_back({1, Y(m), 1, 2});
      ts.push_back({2, Y(m), 2, 2});
    }
    for (int m = 1; m <= 2 * k + 1; ++m) {
      ts.push_back({0, A(m), 0, m <= acc01 ? 2 : 1});
      ts.push_back({1, A(m), 1, m <= acc01 ? 2 : 1});
      ts.push_back({2, A(m), 2, m <= acc2 ? 2 : 1});
    }
    elems.emplace_back(sigma, std::vector<std::string>{"q0", "q1", "q2"}, 0, std::move(ts));
  }
  return Cocoa(std::move(elems));
}

// Parity automaton for the words of natural color 0 with respect to the
// complement of the gen_comp_family language: per-index statuses in
// {NOT_SEEN, OK, DEAD}^k (OK = first Y_i seen and no X_i since), color 0
// exactly on a_{2k+1} while every status is OK. State names spell the
// status vector with the letters N, O, D.
inline Automaton gen_l0hat(int k) {
  if (k < 1) throw std::invalid_argument("gen_l0hat: k must be positive");
  Alphabet sigma = comp_alphabet(k);
  auto X = [&](int i) { return i - 1; };
  auto Y = [&](int i) { return k + i - 1; };
  auto A = [&](int m) { return 2 * k + m - 1; };

  int n = 1;
  for (int i = 0; i < k; ++i) n *= 3;
  auto status = [&](int s, int i) {  // i in 1..k
    for (int t = 1; t < i; ++t) s /= 3;
    return s % 3;                    // 0 = N, 1 = O, 2 = D
  };
  auto with_status = [&](int s, int i, int v) {
    int base = 1;
    for (int t = 1; t < i; ++t) base *= 3;
    return s + (v - status(s, i)) * base;
  };
  std::vector<std::string> names;
  for (int s = 0; s < n; ++s) {
    std::string nm;
    for (int i = 1; i <= k; ++i) nm += "NOD"[status(s, i)];
    names.push_back(std::move(nm));
  }
  std::vector<Transition> ts;
  for (int s = 0; s < n; ++s) {
    bool all_ok = true;
    for (int i = 1; i <= k; ++i)
      if (status(s, i) != 1) all_ok = false;
    for (int i = 1; i <= k; ++i) {
      ts.push_back({s, X(i), status(s, i) == 1 ? with_status(s, i, 2) : s, 1});
      ts.push_back({s, Y(i), status(s, i) == 0 ? with_status(s, i, 1) : s, 1});
    }
    for (int m = 1; m <= 2 * k + 1; ++m)
      ts.push_back({s, A(m), s, (m == 2 * k + 1 && all_ok) ? 0 : 1});
  }
  return Automaton(std::move(sigma), std::move(names), 0, std::move(ts));
}

// Fixed three-state genuinely nondeterministic co-Buchi automaton over
// {a, b}: the b-successor of s0 guesses whether the tail has finitely many
// b letters or finitely many a letters.
inline Automaton gen_ncw_fixture() {
  Alphabet sigma({"a", "b"});
  const int a = 0, b = 1;
  return Automaton(sigma, {"s0", "s1", "s2"}, 0,
                   {{0, a, 0, 2},
                    {0, b, 1, 2},
                    {0, b, 2, 2},
                    {1, a, 1, 2},
                    {1, b, 1, 1},
                    {2, a, 2, 1},
                    {2, b, 2, 2}});
}

// ---------------------------------------------------------------------------
// Family dispatch for the command line.

struct FamilySpec {
  std::string name;  // fig1 fig2 minparity Ck Lk Lhat Pk comp_family L0hat ncw_fixture
  int k = 1;         // ignored by the fixed fixtures
};

struct GenOutput {
  std::vector<std::pair<std::string, Automaton>> automata;
  struct ChainOut {
    std::string name;
    std::vector<std::string> element_names;
  };
  std::vector<ChainOut> chains;
};

namespace detail {

inline void push_chain(GenOutput& out, const std::string& name, const Cocoa& chain) {
  GenOutput::ChainOut co{name, {}};
  for (int i = 0; i < chain.size(); ++i) {
    std::string en = name + "_" + std::to_string(i + 1);
    out.automata.emplace_back(en, chain.elements()[i]);
    co.element_names.push_back(std::move(en));
  }
  out.chains.push_back(std::move(co));
}

}  // namespace detail

inline GenOutput gen(const FamilySpec& spec) {
  GenOutput out;
  const int k = spec.k;
  if (spec.name == "fig1") {
    detail::push_chain(out, "fig1", gen_fig1());
  } else if (spec.name == "fig2") {
    out.automata.emplace_back("fig2", gen_fig2());
  } else if (spec.name == "ncw_fixture") {
    out.automata.emplace_back("ncw_fixture", gen_ncw_fixture());
  } else if (k < 1) {
    throw std::invalid_argument("gen: k must be positive");
  } else if (spec.name == "minparity") {
    out.automata.emplace_back("minparity" + std::to_string(k), gen_minparity_dpw(k));
    detail::push_chain(out, "minparity" + std::to_string(k) + "_chain", gen_minparity_chain(k));
  } else if (spec.name == "Ck") {
    detail::push_chain(out, "C" + std::to_string(k), gen_ck(k));
  } else if (spec.name == "Lk") {
    detail::push_chain(out, "L" + std::to_string(k), gen_lk(k));
  } else if (spec.name == "Lhat") {
    detail::push_chain(out, "Lhat" + std::to_string(k), gen_lhat(k));
  } else if (spec.name == "Pk") {
    out.automata.emplace_back("P" + std::to_string(k), gen_pk(k));
  } else if (spec.name == "comp_family") {
    detail::push_chain(out, "comp" + std::to_string(k), gen_comp_family(k));
  } else if (spec.name == "L0hat") {
    out.automata.emplace_back("L0hat" + std::to_string(k), gen_l0hat(k));
  } else {
    throw std::invalid_argument("gen: unknown family '" + spec.name + "'");
  }
  return out;
}

}  // namespace cocoa
