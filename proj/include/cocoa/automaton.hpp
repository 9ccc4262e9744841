#pragma once

// Transition-based omega-automata: a single representation for deterministic
// and nondeterministic co-Buchi and parity automata, plus run evaluation on
// ultimately periodic (lasso) words.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cocoa {

struct Alphabet {
  std::vector<std::string> letters;  // pairwise distinct, order fixed

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> ls) : letters(std::move(ls)) {
    for (const auto& l : letters)
      if (l.empty()) throw std::invalid_argument("alphabet: empty letter name");
    for (std::size_t i = 0; i < letters.size(); ++i)
      for (std::size_t j = i + 1; j < letters.size(); ++j)
        if (letters[i] == letters[j])
          throw std::invalid_argument("alphabet: duplicate letter '" + letters[i] + "'");
  }

  int size() const { return static_cast<int>(letters.size()); }

  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (letters[i] == name) return static_cast<int>(i);
    return -1;
  }

  const std::string& name(int id) const { return letters.at(static_cast<std::size_t>(id)); }

  bool operator==(const Alphabet&) const = default;
};

struct Transition {
  int src;
  int letter;
  int dst;
  int color;
  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

// Immutable automaton value. Structural well-formedness (index ranges) is
// enforced on construction; the model assumptions of the automaton class
// (input-completeness, color-functionality) are reported by validate() so
// that broken inputs can be diagnosed instead of rejected up front.
class Automaton {
 public:
  Automaton(Alphabet alphabet, std::vector<std::string> states, int initial,
            std::vector<Transition> transitions)
      : alphabet_(std::move(alphabet)),
        states_(std::move(states)),
        initial_(initial),
        trans_(std::move(transitions)) {
    const int n = state_count();
    const int nl = alphabet_.size();
    if (n == 0) throw std::invalid_argument("automaton: no states");
    if (nl == 0) throw std::invalid_argument("automaton: empty alphabet");
    if (initial_ < 0 || initial_ >= n)
      throw std::invalid_argument("automaton: initial state out of range");
    for (const auto& t : trans_) {
      if (t.src < 0 || t.src >= n || t.dst < 0 || t.dst >= n)
        throw std::invalid_argument("automaton: transition endpoint out of range");
      if (t.letter < 0 || t.letter >= nl)
        throw std::invalid_argument("automaton: transition letter out of range");
      if (t.color < 0) throw std::invalid_argument("automaton: negative color");
    }
    std::sort(trans_.begin(), trans_.end());
    trans_.erase(std::unique(trans_.begin(), trans_.end()), trans_.end());
    build_index();
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(int q) const { return states_.at(static_cast<std::size_t>(q)); }
  int state_count() const { return static_cast<int>(states_.size()); }
  int initial() const { return initial_; }
  const std::vector<Transition>& transitions() const { return trans_; }

  int find_state(std::string_view name) const {
    for (std::size_t i = 0; i < states_.size(); ++i)
      if (states_[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::span<const Transition> out(int state, int letter) const {
    const int c = state * alphabet_.size() + letter;
    return {trans_.data() + cell_[c], trans_.data() + cell_[c + 1]};
  }

  // Index of the unique transition of a deterministic (state, letter) cell.
  int transition_index(int state, int letter) const {
    return cell_[state * alphabet_.size() + letter];
  }

  // Derived flags, computed once on construction.
  bool complete() const { return complete_; }
  bool deterministic() const { return deterministic_; }
  bool color_functional() const { return color_functional_; }
  bool cobuchi() const { return cobuchi_; }
  bool valid() const { return complete_ && color_functional_; }
  int max_color() const { return max_color_; }

  // Deterministic fast paths.
  int step(int state, int letter) const { return det_dst_[state * alphabet_.size() + letter]; }
  int color_at(int state, int letter) const {
    const int c = state * alphabet_.size() + letter;
    if (cell_[c] == cell_[c + 1]) return -1;
    return trans_[cell_[c]].color;
  }

  Automaton rebased(int new_initial) const {
    return Automaton(alphabet_, states_, new_initial, trans_);
  }

  // Reachable states in BFS order (letters ascending, successors in
  // transition order).
  std::vector<int> reachable() const {
    std::vector<int> order;
    std::vector<char> seen(states_.size(), 0);
    order.push_back(initial_);
    seen[initial_] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int q = order[head];
      for (int l = 0; l < alphabet_.size(); ++l)
        for (const auto& t : out(q, l))
          if (!seen[t.dst]) {
            seen[t.dst] = 1;
            order.push_back(t.dst);
          }
    }
    return order;
  }

 private:
  void build_index() {
    const int n = state_count();
    const int nl = alphabet_.size();
    cell_.assign(static_cast<std::size_t>(n) * nl + 1, 0);
    for (const auto& t : trans_) cell_[static_cast<std::size_t>(t.src) * nl + t.letter + 1]++;
    for (std::size_t i = 1; i < cell_.size(); ++i) cell_[i] += cell_[i - 1];

    complete_ = true;
    deterministic_ = true;
    color_functional_ = true;
    cobuchi_ = true;
    max_color_ = 0;
    det_dst_.assign(static_cast<std::size_t>(n) * nl, -1);
    for (int q = 0; q < n; ++q)
      for (int l = 0; l < nl; ++l) {
        const auto ts = out(q, l);
        if (ts.empty()) {
          complete_ = false;
          deterministic_ = false;
          continue;
        }
        if (ts.size() > 1) deterministic_ = false;
        det_dst_[static_cast<std::size_t>(q) * nl + l] = ts.front().dst;
        const int c0 = ts.front().color;
        for (const auto& t : ts) {
          if (t.color != c0) color_functional_ = false;
          if (t.color != 1 && t.color != 2) cobuchi_ = false;
          max_color_ = std::max(max_color_, t.color);
        }
      }
  }

  Alphabet alphabet_;
  std::vector<std::string> states_;
  int initial_ = 0;
  std::vector<Transition> trans_;  // sorted by (src, letter, dst, color)
  std::vector<int> cell_;          // CSR offsets per (state, letter)
  std::vector<int> det_dst_;
  bool complete_ = false, deterministic_ = false, color_functional_ = false, cobuchi_ = false;
  int max_color_ = 0;
};

struct LassoWord {
  std::vector<int> stem;    // may be empty
  std::vector<int> period;  // nonempty
  friend bool operator==(const LassoWord&, const LassoWord&) = default;
};

inline LassoWord make_lasso(const Alphabet& sigma, const std::vector<std::string>& stem,
                            const std::vector<std::string>& period) {
  if (period.empty()) throw std::invalid_argument("lasso: empty period");
  LassoWord w;
  auto map = [&](const std::string& name) {
    const int id = sigma.index_of(name);
    if (id < 0) throw std::invalid_argument("lasso: unknown letter '" + name + "'");
    return id;
  };
  for (const auto& s : stem) w.stem.push_back(map(s));
  for (const auto& s : period) w.period.push_back(map(s));
  return w;
}

inline void check_word(const Automaton& a, const LassoWord& w) {
  if (w.period.empty()) throw std::invalid_argument("lasso: empty period");
  for (int l : w.stem)
    if (l < 0 || l >= a.alphabet().size())
      throw std::invalid_argument("lasso: letter outside the automaton alphabet");
  for (int l : w.period)
    if (l < 0 || l >= a.alphabet().size())
      throw std::invalid_argument("lasso: letter outside the automaton alphabet");
}

struct RunResult {
  int dominating_color;
  bool accepted;
  std::vector<int> cycle_states;  // period-boundary states on the detected cycle
};

struct Violation {
  std::string rule;  // "incomplete" | "color-conflict"
  std::string state;
  std::string letter;
  std::string message;
};

// Empty result iff the automaton satisfies the model assumptions
// (input-complete, color-functional). Violations are data, not failures.
inline std::vector<Violation> validate(const Automaton& a) {
  std::vector<Violation> vs;
  for (int q = 0; q < a.state_count(); ++q)
    for (int l = 0; l < a.alphabet().size(); ++l) {
      const auto ts = a.out(q, l);
      if (ts.empty()) {
        vs.push_back({"incomplete", a.state_name(q), a.alphabet().name(l),
                      "no transition for (" + a.state_name(q) + ", " + a.alphabet().name(l) + ")"});
        continue;
      }
      const int c0 = ts.front().color;
      for (const auto& t : ts)
        if (t.color != c0) {
          vs.push_back({"color-conflict", a.state_name(q), a.alphabet().name(l),
                        "transitions for (" + a.state_name(q) + ", " + a.alphabet().name(l) +
                            ") carry different colors"});
          break;
        }
    }
  return vs;
}

// Simulates the stem, then iterates the period until a period-boundary state
// repeats; the dominating color is the minimum color on the detected cycle.
inline RunResult run_deterministic(const Automaton& a, const LassoWord& w) {
  if (!a.deterministic())
    throw std::invalid_argument("run_deterministic: automaton is not deterministic");
  if (!a.valid()) throw std::invalid_argument("run_deterministic: invalid automaton");
  check_word(a, w);

  int q = a.initial();
  for (int l : w.stem) q = a.step(q, l);

  std::vector<int> seen(a.state_count(), -1);
  std::vector<int> boundary{q};
  std::vector<int> rev_min;
  seen[q] = 0;
  for (;;) {
    int s = boundary.back();
    int mc = std::numeric_limits<int>::max();
    for (int l : w.period) {
      mc = std::min(mc, a.color_at(s, l));
      s = a.step(s, l);
    }
    rev_min.push_back(mc);
    if (seen[s] != -1) {
      const int c0 = seen[s];
      const int dom = *std::min_element(rev_min.begin() + c0, rev_min.end());
      std::vector<int> cyc(boundary.begin() + c0, boundary.end());
      return {dom, dom % 2 == 0, std::move(cyc)};
    }
    seen[s] = static_cast<int>(boundary.size());
    boundary.push_back(s);
  }
}

// Allocation-light variant for enumeration loops.
inline int run_dominating_color(const Automaton& a, const LassoWord& w) {
  if (!a.deterministic() || !a.valid())
    throw std::invalid_argument("run_dominating_color: need a valid deterministic automaton");
  static thread_local std::vector<int> seen;
  static thread_local std::vector<int> touched;
  static thread_local std::vector<int> rev_min;
  if (static_cast<int>(seen.size()) < a.state_count()) seen.resize(a.state_count(), -1);
  touched.clear();
  rev_min.clear();

  int q = a.initial();
  for (int l : w.stem) q = a.step(q, l);
  seen[q] = 0;
  touched.push_back(q);
  int cur = q;
  int dom = -1;
  for (;;) {
    int s = cur;
    int mc = std::numeric_limits<int>::max();
    for (int l : w.period) {
      mc = std::min(mc, a.color_at(s, l));
      s = a.step(s, l);
    }
    rev_min.push_back(mc);
    if (seen[s] != -1) {
      dom = *std::min_element(rev_min.begin() + seen[s], rev_min.end());
      break;
    }
    seen[s] = static_cast<int>(rev_min.size());
    touched.push_back(s);
    cur = s;
  }
  for (int t : touched) seen[t] = -1;
  return dom;
}

inline bool run_accepted(const Automaton& a, const LassoWord& w) {
  return run_dominating_color(a, w) % 2 == 0;
}

namespace detail {

// Mixed-radix key for reachable-product exploration.
struct TupleKey {
  std::vector<std::uint64_t> radix;  // cumulative multipliers
  explicit TupleKey(const std::vector<int>& sizes) {
    std::uint64_t mul = 1;
    for (int s : sizes) {
      radix.push_back(mul);
      const std::uint64_t next = mul * static_cast<std::uint64_t>(s);
      if (s != 0 && next / static_cast<std::uint64_t>(s) != mul)
        throw std::invalid_argument("product: state space too large to index");
      mul = next;
    }
  }
  std::uint64_t operator()(const std::vector<int>& tuple) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      k += radix[i] * static_cast<std::uint64_t>(tuple[i]);
    return k;
  }
};

struct SccResult {
  std::vector<int> comp;  // component id per node, -1 for unvisited roots never happens
  int count = 0;
};

// Iterative Tarjan over an adjacency-list graph.
inline SccResult tarjan_scc(int n, const std::vector<std::vector<int>>& adj) {
  SccResult r;
  r.comp.assign(n, -1);
  std::vector<int> low(n, 0), num(n, -1), stk;
  std::vector<char> on(n, 0);
  std::vector<std::pair<int, int>> call;
  int idx = 0;
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    num[root] = low[root] = idx++;
    stk.push_back(root);
    on[root] = 1;
    call.push_back({root, 0});
    while (!call.empty()) {
      const int v = call.back().first;
      int& ei = call.back().second;
      if (ei < static_cast<int>(adj[v].size())) {
        const int w = adj[v][ei++];
        if (num[w] == -1) {
          num[w] = low[w] = idx++;
          stk.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          const int c = r.count++;
          for (;;) {
            const int w = stk.back();
            stk.pop_back();
            on[w] = 0;
            r.comp[w] = c;
            if (w == v) break;
          }
        }
        call.pop_back();
        if (!call.empty()) {
          const int parent = call.back().first;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  return r;
}

}  // namespace detail

// Existential co-Buchi acceptance on the finite product of states and word
// positions: accept iff a color-2-only cycle over period positions is
// reachable from the initial node.
inline bool accepts_lasso_cobuchi(const Automaton& a, const LassoWord& w) {
  if (!a.cobuchi()) throw std::invalid_argument("accepts_lasso_cobuchi: colors outside {1, 2}");
  if (!a.valid()) throw std::invalid_argument("accepts_lasso_cobuchi: invalid automaton");
  check_word(a, w);

  const int m = static_cast<int>(w.stem.size());
  const int p = static_cast<int>(w.period.size());
  const int positions = m + p;
  const int n = a.state_count();
  auto node = [&](int q, int pos) { return q * positions + pos; };
  auto letter_at = [&](int pos) { return pos < m ? w.stem[pos] : w.period[pos - m]; };
  auto next_pos = [&](int pos) { return pos + 1 < positions ? pos + 1 : m; };

  std::vector<char> reach(static_cast<std::size_t>(n) * positions, 0);
  std::vector<int> queue{node(a.initial(), 0)};
  reach[queue[0]] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    const int q = v / positions, pos = v % positions;
    for (const auto& t : a.out(q, letter_at(pos))) {
      const int u = node(t.dst, next_pos(pos));
      if (!reach[u]) {
        reach[u] = 1;
        queue.push_back(u);
      }
    }
  }

  // Subgraph: reachable period nodes, accepting transitions only.
  const int total = n * positions;
  std::vector<std::vector<int>> adj(total);
  for (int q = 0; q < n; ++q)
    for (int pos = m; pos < positions; ++pos) {
      const int v = node(q, pos);
      if (!reach[v]) continue;
      for (const auto& t : a.out(q, letter_at(pos))) {
        if (t.color != 2) continue;
        const int u = node(t.dst, next_pos(pos));
        if (reach[u]) adj[v].push_back(u);
      }
    }
  const auto scc = detail::tarjan_scc(total, adj);
  for (int v = 0; v < total; ++v)
    for (int u : adj[v])
      if (scc.comp[v] == scc.comp[u]) return true;
  return false;
}

// Shared one-state constants (virtual chain endpoints).
inline Automaton make_universal_dcw(const Alphabet& sigma) {
  std::vector<Transition> ts;
  for (int l = 0; l < sigma.size(); ++l) ts.push_back({0, l, 0, 2});
  return Automaton(sigma, {"u0"}, 0, std::move(ts));
}

inline Automaton make_empty_dcw(const Alphabet& sigma) {
  std::vector<Transition> ts;
  for (int l = 0; l < sigma.size(); ++l) ts.push_back({0, l, 0, 1});
  return Automaton(sigma, {"e0"}, 0, std::move(ts));
}

// Name-based structural equality (state order insensitive); used by the
// round-trip checks of the text format.
inline bool structurally_equal(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet()) return false;
  if (a.state_count() != b.state_count()) return false;
  std::vector<std::string> an = a.states(), bn = b.states();
  std::sort(an.begin(), an.end());
  std::sort(bn.begin(), bn.end());
  if (an != bn) return false;
  if (a.state_name(a.initial()) != b.state_name(b.initial())) return false;
  using Named = std::tuple<std::string, int, std::string, int>;
  auto named = [](const Automaton& x) {
    std::vector<Named> v;
    for (const auto& t : x.transitions())
      v.emplace_back(x.state_name(t.src), t.letter, x.state_name(t.dst), t.color);
    std::sort(v.begin(), v.end());
    return v;
  };
  return named(a) == named(b);
}

}  // namespace cocoa
