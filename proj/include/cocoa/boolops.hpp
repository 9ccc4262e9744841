#pragma once

// Product constructions on deterministic co-Buchi automata, breakpoint
// determinization of nondeterministic co-Buchi automata, and parity
// complementation. Only states reachable from the initial tuple are
// materialized, so the size bounds of the constructions are observable as
// exact reachable counts.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cocoa/automaton.hpp"

namespace cocoa {

namespace detail {

inline void require_dcw_family(const std::vector<Automaton>& as, const char* who) {
  if (as.empty()) throw std::invalid_argument(std::string(who) + ": empty operand list");
  for (const auto& a : as) {
    if (a.alphabet() != as.front().alphabet())
      throw std::invalid_argument(std::string(who) + ": alphabet mismatch");
    if (!a.deterministic())
      throw std::invalid_argument(std::string(who) + ": nondeterministic operand");
    if (!a.valid()) throw std::invalid_argument(std::string(who) + ": invalid operand");
    if (!a.cobuchi()) throw std::invalid_argument(std::string(who) + ": operand is not co-Buchi");
  }
}

}  // namespace detail

// Synchronous product; a transition is rejecting iff some component's
// transition is rejecting, which makes the product accept the intersection.
inline Automaton dcw_conjunction(const std::vector<Automaton>& as) {
  detail::require_dcw_family(as, "dcw_conjunction");
  const Alphabet& sigma = as.front().alphabet();
  const int n = static_cast<int>(as.size());

  std::vector<int> sizes;
  for (const auto& a : as) sizes.push_back(a.state_count());
  detail::TupleKey key(sizes);

  std::vector<std::vector<int>> states;
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::string> names;
  std::vector<Transition> ts;

  auto intern = [&](const std::vector<int>& tuple) {
    auto [it, fresh] = index.try_emplace(key(tuple), static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(tuple);
      std::string nm = "(";
      for (int i = 0; i < n; ++i) {
        if (i) nm += '|';
        nm += as[i].state_name(tuple[i]);
      }
      nm += ')';
      names.push_back(std::move(nm));
    }
    return it->second;
  };

  std::vector<int> init;
  for (const auto& a : as) init.push_back(a.initial());
  intern(init);
  for (int q = 0; q < static_cast<int>(states.size()); ++q) {
    const std::vector<int> cur = states[q];
    for (int l = 0; l < sigma.size(); ++l) {
      std::vector<int> nxt(n);
      int color = 2;
      for (int i = 0; i < n; ++i) {
        nxt[i] = as[i].step(cur[i], l);
        if (as[i].color_at(cur[i], l) == 1) color = 1;
      }
      ts.push_back({q, l, intern(nxt), color});
    }
  }
  return Automaton(sigma, std::move(names), 0, std::move(ts));
}

// Product extended with a round-robin index over the operands. The index
// advances exactly when the pointed component takes a rejecting transition;
// the output transition is rejecting exactly when this advance wraps around
// from the last operand to the first.
inline Automaton dcw_disjunction(const std::vector<Automaton>& as) {
  detail::require_dcw_family(as, "dcw_disjunction");
  const Alphabet& sigma = as.front().alphabet();
  const int n = static_cast<int>(as.size());

  std::vector<int> sizes;
  for (const auto& a : as) sizes.push_back(a.state_count());
  sizes.push_back(n);  // counter - 1
  detail::TupleKey key(sizes);

  std::vector<std::vector<int>> states;
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::string> names;
  std::vector<Transition> ts;

  auto intern = [&](const std::vector<int>& tuple) {
    auto [it, fresh] = index.try_emplace(key(tuple), static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(tuple);
      std::string nm = "(";
      for (int i = 0; i < n; ++i) {
        if (i) nm += '|';
        nm += as[i].state_name(tuple[i]);
      }
      nm += ")#" + std::to_string(tuple[n] + 1);
      names.push_back(std::move(nm));
    }
    return it->second;
  };

  std::vector<int> init;
  for (const auto& a : as) init.push_back(a.initial());
  init.push_back(0);  // counter starts at 1
  intern(init);
  for (int q = 0; q < static_cast<int>(states.size()); ++q) {
    const std::vector<int> cur = states[q];
    const int j = cur[n];
    for (int l = 0; l < sigma.size(); ++l) {
      std::vector<int> nxt(n + 1);
      for (int i = 0; i < n; ++i) nxt[i] = as[i].step(cur[i], l);
      const bool advance = as[j].color_at(cur[j], l) == 1;
      nxt[n] = advance ? (j + 1) % n : j;
      const int color = (advance && j == n - 1) ? 1 : 2;
      ts.push_back({q, l, intern(nxt), color});
    }
  }
  return Automaton(sigma, std::move(names), 0, std::move(ts));
}

// Miyano-Hayashi breakpoint determinization of a (nondeterministic) co-Buchi
// automaton: S tracks all reachable run endpoints, O the runs with no
// rejecting transition since the last breakpoint. A transition is rejecting
// iff O runs empty, in which case O resets to S.
inline Automaton ncw_determinize(const Automaton& a) {
  if (!a.cobuchi()) throw std::invalid_argument("ncw_determinize: colors outside {1, 2}");
  if (!a.valid()) throw std::invalid_argument("ncw_determinize: invalid automaton");
  const int n = a.state_count();
  if (n > 64) throw std::invalid_argument("ncw_determinize: more than 64 states");
  const Alphabet& sigma = a.alphabet();

  using Key = std::pair<std::uint64_t, std::uint64_t>;  // (S, O) bitsets
  std::map<Key, int> index;
  std::vector<Key> states;
  std::vector<std::string> names;
  std::vector<Transition> ts;

  auto set_name = [&](std::uint64_t bits) {
    std::string s = "{";
    bool first = true;
    for (int q = 0; q < n; ++q)
      if (bits >> q & 1) {
        if (!first) s += ',';
        first = false;
        s += a.state_name(q);
      }
    s += '}';
    return s;
  };
  auto intern = [&](Key k) {
    auto [it, fresh] = index.try_emplace(k, static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(k);
      names.push_back(set_name(k.first) + "/" + set_name(k.second));
    }
    return it->second;
  };

  const std::uint64_t init = 1ull << a.initial();
  intern({init, init});
  for (int q = 0; q < static_cast<int>(states.size()); ++q) {
    const auto [S, O] = states[q];
    for (int l = 0; l < sigma.size(); ++l) {
      std::uint64_t S2 = 0, O2 = 0;
      for (int s = 0; s < n; ++s) {
        if (!(S >> s & 1)) continue;
        for (const auto& t : a.out(s, l)) {
          S2 |= 1ull << t.dst;
          if ((O >> s & 1) && t.color == 2) O2 |= 1ull << t.dst;
        }
      }
      const int color = O2 == 0 ? 1 : 2;
      if (O2 == 0) O2 = S2;
      ts.push_back({q, l, intern({S2, O2}), color});
    }
  }
  return Automaton(sigma, std::move(names), 0, std::move(ts));
}

// Identical transition structure with every color incremented by one; for a
// deterministic parity automaton this accepts exactly the complement.
inline Automaton dpw_complement(const Automaton& a) {
  if (!a.deterministic()) throw std::invalid_argument("dpw_complement: nondeterministic input");
  if (!a.valid()) throw std::invalid_argument("dpw_complement: invalid automaton");
  std::vector<Transition> ts = a.transitions();
  for (auto& t : ts) t.color += 1;
  return Automaton(a.alphabet(), a.states(), a.initial(), std::move(ts));
}

inline Automaton determinize_if_needed(const Automaton& a) {
  if (a.deterministic()) return a;
  return ncw_determinize(a);
}

}  // namespace cocoa
