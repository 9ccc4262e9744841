#pragma once

// Chains of co-Buchi automata: chain semantics, the chain-to-parity product,
// the level-pair conjunction construction, De Morgan operations, chain
// well-formedness checks, and a bounded natural-color probe.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cocoa/analysis.hpp"
#include "cocoa/automaton.hpp"
#include "cocoa/boolops.hpp"

namespace cocoa {

// Ordered chain A_1 ... A_n of co-Buchi automata over one alphabet. The
// virtual endpoints A_0 = Sigma^omega and A_{n+1} = empty are not stored.
// Strictness of the language chain is checked lazily by check_chain, not on
// construction.
class Cocoa {
 public:
  explicit Cocoa(std::vector<Automaton> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("cocoa: empty chain");
    for (const auto& a : elements_) {
      if (a.alphabet() != elements_.front().alphabet())
        throw std::invalid_argument("cocoa: alphabet mismatch between chain elements");
      if (!a.valid()) throw std::invalid_argument("cocoa: invalid chain element");
      if (!a.cobuchi()) throw std::invalid_argument("cocoa: chain element is not co-Buchi");
    }
  }

  const Alphabet& alphabet() const { return elements_.front().alphabet(); }
  const std::vector<Automaton>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int total_states() const {
    int n = 0;
    for (const auto& a : elements_) n += a.state_count();
    return n;
  }

 private:
  std::vector<Automaton> elements_;
};

struct CocoaVerdict {
  int level;    // highest element index accepting the word, 0 if none
  bool member;  // level is even
};

// Highest accepting chain index; deterministic elements take the direct run,
// nondeterministic ones existential acceptance.
inline CocoaVerdict cocoa_eval(const Cocoa& c, const LassoWord& w) {
  check_word(c.elements().front(), w);
  int level = 0;
  for (int i = c.size(); i >= 1; --i) {
    const Automaton& a = c.elements()[i - 1];
    const bool acc = a.deterministic() ? run_accepted(a, w) : accepts_lasso_cobuchi(a, w);
    if (acc) {
      level = i;
      break;
    }
  }
  return {level, level % 2 == 0};
}

// Synchronous product of the (determinized) chain elements. A transition is
// colored with the smallest j such that component j+1 takes a rejecting
// transition, or with the chain length if no component rejects; for a valid
// chain the dominating color of any run equals the chain level of its word.
inline Automaton cocoa_to_dpw(const Cocoa& c) {
  std::vector<Automaton> ds;
  ds.reserve(c.size());
  for (const auto& a : c.elements()) ds.push_back(determinize_if_needed(a));
  const Alphabet& sigma = c.alphabet();
  const int k = static_cast<int>(ds.size());

  std::vector<int> sizes;
  for (const auto& d : ds) sizes.push_back(d.state_count());
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
      for (int i = 0; i < k; ++i) {
        if (i) nm += '|';
        nm += ds[i].state_name(tuple[i]);
      }
      nm += ')';
      names.push_back(std::move(nm));
    }
    return it->second;
  };

  std::vector<int> init;
  for (const auto& d : ds) init.push_back(d.initial());
  intern(init);
  for (int q = 0; q < static_cast<int>(states.size()); ++q) {
    const std::vector<int> cur = states[q];
    for (int l = 0; l < sigma.size(); ++l) {
      std::vector<int> nxt(k);
      int color = k;
      for (int i = 0; i < k; ++i) {
        nxt[i] = ds[i].step(cur[i], l);
        if (color == k && ds[i].color_at(cur[i], l) == 1) color = i;
      }
      ts.push_back({q, l, intern(nxt), color});
    }
  }
  return Automaton(sigma, std::move(names), 0, std::move(ts));
}

struct ChainPairReport {
  int index;           // checks element index vs index + 1 (1-based)
  bool inclusion_ok;   // L(A_{i+1}) subseteq L(A_i)
  std::optional<LassoWord> inclusion_witness;  // in L(A_{i+1}) \ L(A_i)
  bool strict;         // L(A_i) \ L(A_{i+1}) nonempty
  std::optional<LassoWord> strictness_witness;
};

struct ChainReport {
  std::vector<ChainPairReport> pairs;
  bool ok() const {
    for (const auto& p : pairs)
      if (!p.inclusion_ok || !p.strict) return false;
    return true;
  }
};

// Decides strict inclusion for each consecutive pair via determinization and
// difference emptiness.
inline ChainReport check_chain(const Cocoa& c) {
  ChainReport report;
  std::vector<Automaton> ds;
  for (const auto& a : c.elements()) ds.push_back(determinize_if_needed(a));
  for (int i = 0; i + 1 < static_cast<int>(ds.size()); ++i) {
    ChainPairReport pr;
    pr.index = i + 1;
    auto bad = dpw_diff_nonempty(ds[i + 1], ds[i]);
    pr.inclusion_ok = !bad.has_value();
    pr.inclusion_witness = bad;
    auto sep = dpw_diff_nonempty(ds[i], ds[i + 1]);
    pr.strict = sep.has_value();
    pr.strictness_witness = sep;
    report.pairs.push_back(std::move(pr));
  }
  return report;
}

// Index-pair set driving the conjunction construction for level u: even u
// collects the even pairs summing to u, odd u the pairs with an odd member
// summing to u or u + 1.
struct LevelPairSet {
  int u;
  std::vector<std::pair<int, int>> pairs;  // lexicographic (i, j) order
};

inline LevelPairSet gamma_level_pairs(int k, int u) {
  if (k < 1 || u < 0 || u > 2 * k) throw std::invalid_argument("gamma_level_pairs: bad index");
  LevelPairSet g{u, {}};
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      if (u % 2 == 0) {
        if (i + j == u && i % 2 == 0 && j % 2 == 0) g.pairs.emplace_back(i, j);
      } else {
        if (i + j >= u && i + j <= u + 1 && (i % 2 == 1 || j % 2 == 1)) g.pairs.emplace_back(i, j);
      }
    }
  return g;
}

// Pointwise-minimal pairs of a Gamma set. Chains fall, so the language of a
// pair shrinks as the pair grows; a pair lying pointwise above another one
// contributes nothing to the union and is pruned.
inline std::vector<std::pair<int, int>> non_dominated(const std::vector<std::pair<int, int>>& ps) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : ps) {
    bool dominated = false;
    for (const auto& q : ps)
      if (q != p && q.first <= p.first && q.second <= p.second) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(p);
  }
  return out;
}

// Level-pair conjunction of two equal-length chains: output element u is the
// disjunction over the non-dominated pairs (i, j) of the conjunction of the
// level-i element of the first chain with the level-j element of the second,
// where level 0 stands for the universal one-state automaton. The result
// represents the intersection language level-correctly for valid inputs;
// canonicity is only guaranteed for the language families this construction
// was defined for, so callers verify language equality separately.
inline Cocoa cocoa_conjunction_gamma(const Cocoa& ca, const Cocoa& cb) {
  if (ca.alphabet() != cb.alphabet())
    throw std::invalid_argument("cocoa_conjunction_gamma: alphabet mismatch");
  if (ca.size() != cb.size())
    throw std::invalid_argument("cocoa_conjunction_gamma: chains of different length");
  const int k = ca.size();
  const Automaton universal = make_universal_dcw(ca.alphabet());

  std::vector<Automaton> da, db;
  for (const auto& a : ca.elements()) da.push_back(determinize_if_needed(a));
  for (const auto& b : cb.elements()) db.push_back(determinize_if_needed(b));
  auto lift_a = [&](int i) -> const Automaton& { return i == 0 ? universal : da[i - 1]; };
  auto lift_b = [&](int j) -> const Automaton& { return j == 0 ? universal : db[j - 1]; };

  std::vector<Automaton> elems;
  for (int u = 1; u <= 2 * k; ++u) {
    const auto pairs = non_dominated(gamma_level_pairs(k, u).pairs);
    if (pairs.empty()) {
      elems.push_back(make_empty_dcw(ca.alphabet()));
      continue;
    }
    std::vector<Automaton> parts;
    for (const auto& [i, j] : pairs) parts.push_back(dcw_conjunction({lift_a(i), lift_b(j)}));
    elems.push_back(dcw_disjunction(parts));
  }
  return Cocoa(std::move(elems));
}

namespace detail {

inline bool reachable_rejecting_free(const Automaton& a) {
  for (int q : a.reachable())
    for (int l = 0; l < a.alphabet().size(); ++l)
      for (const auto& t : a.out(q, l))
        if (t.color == 1) return false;
  return true;
}

}  // namespace detail

// Complement by shifting the chain one level: prepend the universal one-state
// automaton, or drop the first element when it is already universal (no
// reachable rejecting transition). The output is not claimed canonical.
inline Cocoa cocoa_demorgan_complement(const Cocoa& c) {
  const bool first_universal = detail::reachable_rejecting_free(c.elements().front());
  std::vector<Automaton> elems;
  if (first_universal) {
    if (c.size() == 1) {
      // complement of the empty language: one all-rejecting element keeps
      // every word at level 0
      elems.push_back(make_empty_dcw(c.alphabet()));
    } else {
      elems.assign(c.elements().begin() + 1, c.elements().end());
    }
  } else {
    elems.push_back(make_universal_dcw(c.alphabet()));
    for (const auto& a : c.elements()) elems.push_back(a);
  }
  return Cocoa(std::move(elems));
}

// Disjunction through De Morgan: complement both chains, conjoin, complement
// the result (the conjunction's first element is universal and gets dropped).
inline Cocoa cocoa_demorgan_disjunction(const Cocoa& ca, const Cocoa& cb) {
  const Cocoa na = cocoa_demorgan_complement(ca);
  const Cocoa nb = cocoa_demorgan_complement(cb);
  return cocoa_demorgan_complement(cocoa_conjunction_gamma(na, nb));
}

// One probe step: the injected word, the lasso it produced, and the reference
// dominating colors on both sides of the step.
struct ToggleStep {
  std::vector<int> injected;  // injected at every period position
  LassoWord result;
  int color_before;
  int color_after;
};

struct NaturalColorVerdict {
  int certified_lower_bound;
  std::vector<ToggleStep> toggle_chain;
};

namespace detail {

inline LassoWord inject_every_period_position(const LassoWord& w, const std::vector<int>& word) {
  LassoWord out;
  out.stem = w.stem;
  for (int l : w.period) {
    out.period.push_back(l);
    out.period.insert(out.period.end(), word.begin(), word.end());
  }
  return out;
}

// Memoized residual-class preservation check: delta*(q, word) must be
// language-equivalent to q in the reference automaton.
struct ResidualInvariance {
  const Automaton& ref;
  std::map<std::pair<int, int>, bool> cache;

  explicit ResidualInvariance(const Automaton& reference) : ref(reference) {}

  bool state_pair_equivalent(int p, int q) {
    if (p == q) return true;
    const auto k = std::minmax(p, q);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    const bool eq = dpw_equiv(ref.rebased(p), ref.rebased(q)).equivalent;
    cache.emplace(k, eq);
    return eq;
  }

  // Checks every injection point of the run of `injected_lasso`: the states
  // reached right after each original period letter, across the transient
  // revolutions and the cycle.
  bool invariant_at_all_injection_points(const LassoWord& original, const LassoWord& injected,
                                         const std::vector<int>& word) {
    const std::size_t step = 1 + word.size();  // original letter + injected block
    int q = ref.initial();
    for (int l : injected.stem) q = ref.step(q, l);
    std::vector<int> seen(ref.state_count(), -1);
    seen[q] = 0;
    int rev = 0;
    int cur = q;
    for (;;) {
      int s = cur;
      for (std::size_t pos = 0; pos < injected.period.size(); ++pos) {
        s = ref.step(s, injected.period[pos]);
        if (pos % step == 0) {
          // s sits right after an original letter; the injected word follows
          int s2 = s;
          for (int l : word) s2 = ref.step(s2, l);
          if (!state_pair_equivalent(s, s2)) return false;
        }
      }
      ++rev;
      if (seen[s] != -1) break;
      seen[s] = rev;
      cur = s;
    }
    (void)original;
    return true;
  }
};

}  // namespace detail

// Certified lower bound on the natural color of a word by iterated search.
// Each step injects one word at every period position such that the
// reference automaton's residual class is unchanged at every injection
// point, membership toggles, and the reference dominating color strictly
// decreases; each successful step raises the bound by one.
inline NaturalColorVerdict natural_color_probe(const Automaton& reference, const LassoWord& w,
                                               int max_inject_len, int max_depth) {
  if (!reference.deterministic())
    throw std::invalid_argument("natural_color_probe: nondeterministic reference");
  if (!reference.valid()) throw std::invalid_argument("natural_color_probe: invalid reference");
  check_word(reference, w);
  if (max_inject_len < 0 || max_depth < 0)
    throw std::invalid_argument("natural_color_probe: negative bound");

  detail::ResidualInvariance inv(reference);
  NaturalColorVerdict verdict{0, {}};
  LassoWord cur = w;

  // candidate words of a given length in alphabet-lexicographic order
  const int nl = reference.alphabet().size();
  auto next_candidate = [&](std::vector<int>& cand) {
    for (int pos = static_cast<int>(cand.size()) - 1; pos >= 0; --pos) {
      if (++cand[pos] < nl) return true;
      cand[pos] = 0;
    }
    return false;
  };

  for (int depth = 0; depth < max_depth; ++depth) {
    const int color_before = run_dominating_color(reference, cur);
    const bool member_before = color_before % 2 == 0;
    // Prefer the first candidate dropping the reference color by exactly one;
    // otherwise take the shallowest admissible drop, which keeps the most
    // headroom for later toggles.
    std::optional<ToggleStep> best;
    bool exact = false;
    for (int len = 1; len <= max_inject_len && !exact; ++len) {
      std::vector<int> cand(len, 0);
      do {
        const LassoWord injected = detail::inject_every_period_position(cur, cand);
        const int color_after = run_dominating_color(reference, injected);
        if ((color_after % 2 == 0) == member_before) continue;  // no membership toggle
        if (color_after >= color_before) continue;              // colors may only decrease
        if (best && color_after <= best->color_after) continue;
        if (!inv.invariant_at_all_injection_points(cur, injected, cand)) continue;
        best = ToggleStep{cand, injected, color_before, color_after};
        if (color_after == color_before - 1) {
          exact = true;
          break;
        }
      } while (next_candidate(cand));
    }
    if (!best) break;
    cur = best->result;
    verdict.toggle_chain.push_back(std::move(*best));
    verdict.certified_lower_bound += 1;
  }
  return verdict;
}

// Replays a toggle chain against the reference: every step must flip
// membership and keep the residual class at each injection point.
inline bool replay_toggle_chain(const Automaton& reference, const LassoWord& w,
                                const NaturalColorVerdict& verdict) {
  detail::ResidualInvariance inv(reference);
  LassoWord cur = w;
  for (const auto& step : verdict.toggle_chain) {
    const LassoWord injected = detail::inject_every_period_position(cur, step.injected);
    if (!(injected == step.result)) return false;
    const int before = run_dominating_color(reference, cur);
    const int after = run_dominating_color(reference, injected);
    if (before != step.color_before || after != step.color_after) return false;
    if ((before % 2 == 0) == (after % 2 == 0)) return false;
    if (!inv.invariant_at_all_injection_points(cur, injected, step.injected)) return false;
    cur = injected;
  }
  return static_cast<int>(verdict.toggle_chain.size()) == verdict.certified_lower_bound;
}

}  // namespace cocoa
