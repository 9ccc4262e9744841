#pragma once

// SCC machinery, Streett emptiness with lasso witnesses, language difference
// and equivalence of deterministic parity automata, residual-language
// counting, and the letter-closed sub-SCC checker.
//
// Every difference/emptiness question is reduced to Streett emptiness on a
// product: the conjunction of parity conditions is a Streett condition, so
// one algorithm covers every use site. Witnesses are replay-verified before
// they are returned.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cocoa/automaton.hpp"

namespace cocoa {

struct Scc {
  std::vector<int> states;             // ascending state ids
  std::vector<Transition> transitions; // internal transitions, canonical order
};

// Maximal SCCs among reachable states; trivial single-state components are
// kept only when they carry a self-loop. Ordered by smallest member state.
inline std::vector<Scc> scc_decompose(const Automaton& a) {
  if (!a.valid()) throw std::invalid_argument("scc_decompose: invalid automaton");
  const int n = a.state_count();
  std::vector<char> reach(n, 0);
  for (int q : a.reachable()) reach[q] = 1;

  std::vector<std::vector<int>> adj(n);
  for (const auto& t : a.transitions())
    if (reach[t.src] && reach[t.dst]) adj[t.src].push_back(t.dst);
  const auto scc = detail::tarjan_scc(n, adj);

  std::vector<Scc> comps(scc.count);
  for (int q = 0; q < n; ++q)
    if (reach[q]) comps[scc.comp[q]].states.push_back(q);
  for (const auto& t : a.transitions())
    if (reach[t.src] && scc.comp[t.src] == scc.comp[t.dst])
      comps[scc.comp[t.src]].transitions.push_back(t);

  std::vector<Scc> out;
  for (auto& c : comps)
    if (!c.transitions.empty()) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(),
            [](const Scc& x, const Scc& y) { return x.states.front() < y.states.front(); });
  return out;
}

// Streett pair over transition indices of one automaton: a run satisfies the
// pair iff infinitely many L-transitions imply infinitely many U-transitions.
struct StreettPair {
  std::vector<int> L;
  std::vector<int> U;
};

// One pair per odd color c present: (transitions of color c, transitions of
// color < c). A run satisfies all pairs iff its dominating color is even.
inline std::vector<StreettPair> parity_to_streett(const Automaton& a) {
  if (!a.deterministic()) throw std::invalid_argument("parity_to_streett: nondeterministic input");
  if (!a.valid()) throw std::invalid_argument("parity_to_streett: invalid automaton");
  std::vector<StreettPair> pairs;
  for (int c = 1; c <= a.max_color(); c += 2) {
    bool present = false;
    for (const auto& t : a.transitions())
      if (t.color == c) {
        present = true;
        break;
      }
    if (!present) continue;
    StreettPair p;
    for (int i = 0; i < static_cast<int>(a.transitions().size()); ++i) {
      const int tc = a.transitions()[i].color;
      if (tc == c) p.L.push_back(i);
      if (tc < c) p.U.push_back(i);
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

namespace detail {

// Replays a lasso and checks that its run satisfies every Streett pair.
inline bool replay_streett(const Automaton& g, const std::vector<StreettPair>& pairs,
                           const LassoWord& w) {
  const int np = static_cast<int>(pairs.size());
  std::vector<std::uint32_t> lmask(g.transitions().size(), 0), umask(g.transitions().size(), 0);
  for (int p = 0; p < np; ++p) {
    for (int t : pairs[p].L) lmask[t] |= 1u << p;
    for (int t : pairs[p].U) umask[t] |= 1u << p;
  }
  int q = g.initial();
  for (int l : w.stem) q = g.step(q, l);
  std::vector<int> seen(g.state_count(), -1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rev;
  seen[q] = 0;
  int cur = q;
  for (;;) {
    int s = cur;
    std::uint32_t lh = 0, uh = 0;
    for (int l : w.period) {
      const int t = g.transition_index(s, l);
      lh |= lmask[t];
      uh |= umask[t];
      s = g.step(s, l);
    }
    rev.push_back({lh, uh});
    if (seen[s] != -1) {
      std::uint32_t lall = 0, uall = 0;
      for (std::size_t i = seen[s]; i < rev.size(); ++i) {
        lall |= rev[i].first;
        uall |= rev[i].second;
      }
      return (lall & ~uall) == 0;
    }
    seen[s] = static_cast<int>(rev.size());
    cur = s;
  }
}

struct StreettSearch {
  const Automaton& g;
  std::vector<std::uint32_t> lmask, umask;

  StreettSearch(const Automaton& graph, const std::vector<StreettPair>& pairs) : g(graph) {
    if (pairs.size() > 32) throw std::invalid_argument("streett_nonempty: more than 32 pairs");
    lmask.assign(g.transitions().size(), 0);
    umask.assign(g.transitions().size(), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (int t : pairs[p].L) lmask[t] |= 1u << p;
      for (int t : pairs[p].U) umask[t] |= 1u << p;
    }
  }

  // Deterministic BFS stem from the initial state to `target` over the full
  // automaton.
  std::vector<int> stem_to(int target) const {
    const int n = g.state_count();
    std::vector<int> prev_state(n, -1), prev_letter(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{g.initial()};
    seen[g.initial()] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[target]; ++head) {
      const int q = queue[head];
      for (int l = 0; l < g.alphabet().size(); ++l)
        for (const auto& t : g.out(q, l))
          if (!seen[t.dst]) {
            seen[t.dst] = 1;
            prev_state[t.dst] = q;
            prev_letter[t.dst] = t.letter;
            queue.push_back(t.dst);
          }
    }
    if (!seen[target]) throw std::logic_error("internal: witness start unreachable");
    std::vector<int> letters;
    for (int q = target; q != g.initial(); q = prev_state[q]) letters.push_back(prev_letter[q]);
    std::reverse(letters.begin(), letters.end());
    return letters;
  }

  // Closed walk from the smallest member state covering every edge of one
  // strongly connected edge set; edges are transition indices in canonical
  // order.
  LassoWord witness(const std::vector<int>& edges) const {
    const auto& ts = g.transitions();
    // compact node ids in order of first appearance by smallest state id
    std::vector<int> nodes;
    std::unordered_map<int, int> node_id;
    for (int e : edges)
      for (int q : {ts[e].src, ts[e].dst})
        if (node_id.emplace(q, static_cast<int>(nodes.size())).second) nodes.push_back(q);
    int start_orig = nodes.front();
    for (int q : nodes) start_orig = std::min(start_orig, q);
    const int start = node_id[start_orig];

    const int m = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> outs(m);  // edge indices, ascending
    for (int e : edges) outs[node_id[ts[e].src]].push_back(e);

    std::vector<std::size_t> next_out(m, 0);
    std::vector<int> unused_outs(m);
    for (int v = 0; v < m; ++v) unused_outs[v] = static_cast<int>(outs[v].size());
    std::vector<char> used;
    {
      // used flags per local edge position: map global edge id -> local slot
      used.assign(edges.size(), 0);
    }
    std::unordered_map<int, int> slot;
    for (std::size_t i = 0; i < edges.size(); ++i) slot[edges[i]] = static_cast<int>(i);

    auto take = [&](int e) {
      used[slot[e]] = 1;
      unused_outs[node_id[ts[e].src]]--;
    };

    std::vector<int> period;
    int cur = start;
    int remaining = static_cast<int>(edges.size());
    while (remaining > 0) {
      auto& ptr = next_out[cur];
      while (ptr < outs[cur].size() && used[slot[outs[cur][ptr]]]) ++ptr;
      if (ptr < outs[cur].size()) {
        const int e = outs[cur][ptr];
        take(e);
        --remaining;
        period.push_back(ts[e].letter);
        cur = node_id[ts[e].dst];
        continue;
      }
      // BFS over the edge set to the nearest node with unused outgoing edges
      std::vector<int> prev_node(m, -1), prev_edge(m, -1);
      std::vector<char> seen(m, 0);
      std::vector<int> queue{cur};
      seen[cur] = 1;
      int target = -1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        if (unused_outs[v] > 0) {
          target = v;
          break;
        }
        for (int e : outs[v]) {
          const int d = node_id[ts[e].dst];
          if (!seen[d]) {
            seen[d] = 1;
            prev_node[d] = v;
            prev_edge[d] = e;
            queue.push_back(d);
          }
        }
      }
      if (target < 0) throw std::logic_error("internal: disconnected SCC walk");
      std::vector<int> path;
      for (int v = target; v != cur; v = prev_node[v]) path.push_back(prev_edge[v]);
      std::reverse(path.begin(), path.end());
      for (int e : path) period.push_back(ts[e].letter);
      cur = target;
    }
    if (cur != start) {
      // close the walk
      std::vector<int> prev_node(m, -1), prev_edge(m, -1);
      std::vector<char> seen(m, 0);
      std::vector<int> queue{cur};
      seen[cur] = 1;
      for (std::size_t head = 0; head < queue.size() && !seen[start]; ++head) {
        const int v = queue[head];
        for (int e : outs[v]) {
          const int d = node_id[ts[e].dst];
          if (!seen[d]) {
            seen[d] = 1;
            prev_node[d] = v;
            prev_edge[d] = e;
            queue.push_back(d);
          }
        }
      }
      if (!seen[start]) throw std::logic_error("internal: SCC walk cannot close");
      std::vector<int> path;
      for (int v = start; v != cur; v = prev_node[v]) path.push_back(prev_edge[v]);
      std::reverse(path.begin(), path.end());
      for (int e : path) period.push_back(ts[e].letter);
    }

    LassoWord w;
    w.stem = stem_to(start_orig);
    w.period = std::move(period);
    return w;
  }

  // Marks the nodes of every component that satisfies all pairs after the
  // recursive pruning; used for the all-states satisfiability variant.
  void collect_good(const std::vector<int>& edges, std::vector<char>& good) const {
    if (edges.empty()) return;
    const auto& ts = g.transitions();
    std::vector<int> nodes;
    std::unordered_map<int, int> node_id;
    for (int e : edges)
      for (int q : {ts[e].src, ts[e].dst})
        if (node_id.emplace(q, static_cast<int>(nodes.size())).second) nodes.push_back(q);
    const int m = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> adj(m);
    for (int e : edges) adj[node_id[ts[e].src]].push_back(node_id[ts[e].dst]);
    const auto scc = tarjan_scc(m, adj);

    std::vector<std::vector<int>> comp_edges(scc.count);
    for (int e : edges) {
      const int cs = scc.comp[node_id[ts[e].src]];
      if (cs == scc.comp[node_id[ts[e].dst]]) comp_edges[cs].push_back(e);
    }
    for (int c = 0; c < scc.count; ++c) {
      const auto& internal = comp_edges[c];
      if (internal.empty()) continue;
      std::uint32_t orl = 0, oru = 0;
      for (int e : internal) {
        orl |= lmask[e];
        oru |= umask[e];
      }
      const std::uint32_t bad = orl & ~oru;
      if (bad == 0) {
        for (int v = 0; v < m; ++v)
          if (scc.comp[v] == c) good[nodes[v]] = 1;
        continue;
      }
      std::vector<int> pruned;
      pruned.reserve(internal.size());
      for (int e : internal)
        if (!(lmask[e] & bad)) pruned.push_back(e);
      collect_good(pruned, good);
    }
  }

  // Recursive search over an edge list (ascending transition indices).
  std::optional<LassoWord> solve(const std::vector<int>& edges) const {
    if (edges.empty()) return std::nullopt;
    const auto& ts = g.transitions();

    // compact nodes
    std::vector<int> nodes;
    std::unordered_map<int, int> node_id;
    for (int e : edges)
      for (int q : {ts[e].src, ts[e].dst})
        if (node_id.emplace(q, static_cast<int>(nodes.size())).second) nodes.push_back(q);
    const int m = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> adj(m);
    for (int e : edges) adj[node_id[ts[e].src]].push_back(node_id[ts[e].dst]);
    const auto scc = tarjan_scc(m, adj);

    // internal edges per component
    std::vector<std::vector<int>> comp_edges(scc.count);
    for (int e : edges) {
      const int cs = scc.comp[node_id[ts[e].src]];
      if (cs == scc.comp[node_id[ts[e].dst]]) comp_edges[cs].push_back(e);
    }
    // order components by smallest member state id
    std::vector<int> rep(scc.count, g.state_count());
    for (int v = 0; v < m; ++v) rep[scc.comp[v]] = std::min(rep[scc.comp[v]], nodes[v]);
    std::vector<int> order(scc.count);
    for (int c = 0; c < scc.count; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return rep[x] < rep[y]; });

    for (int c : order) {
      auto& internal = comp_edges[c];
      if (internal.empty()) continue;
      std::uint32_t orl = 0, oru = 0;
      for (int e : internal) {
        orl |= lmask[e];
        oru |= umask[e];
      }
      const std::uint32_t bad = orl & ~oru;
      if (bad == 0) return witness(internal);
      std::vector<int> pruned;
      pruned.reserve(internal.size());
      for (int e : internal)
        if (!(lmask[e] & bad)) pruned.push_back(e);
      if (auto w = solve(pruned)) return w;
    }
    return std::nullopt;
  }
};

// All states of the graph from which some run satisfies every Streett pair.
inline std::vector<char> streett_sat_states(const Automaton& g,
                                            const std::vector<StreettPair>& pairs) {
  std::vector<int> edges(g.transitions().size());
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i] = static_cast<int>(i);
  StreettSearch search(g, pairs);
  std::vector<char> good(g.state_count(), 0);
  search.collect_good(edges, good);
  // backward closure: a finite prefix to a good component is always allowed
  std::vector<std::vector<int>> radj(g.state_count());
  for (const auto& t : g.transitions()) radj[t.dst].push_back(t.src);
  std::vector<int> queue;
  std::vector<char> sat = good;
  for (int q = 0; q < g.state_count(); ++q)
    if (sat[q]) queue.push_back(q);
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int p : radj[queue[head]])
      if (!sat[p]) {
        sat[p] = 1;
        queue.push_back(p);
      }
  return sat;
}

}  // namespace detail

// Lasso whose run satisfies every Streett pair, or nothing if no such run
// exists. The returned witness is replay-verified.
inline std::optional<LassoWord> streett_nonempty(const Automaton& g,
                                                 const std::vector<StreettPair>& pairs) {
  if (!g.deterministic()) throw std::invalid_argument("streett_nonempty: nondeterministic graph");
  if (!g.valid()) throw std::invalid_argument("streett_nonempty: invalid graph");

  std::vector<char> reach(g.state_count(), 0);
  for (int q : g.reachable()) reach[q] = 1;
  std::vector<int> alive;
  alive.reserve(g.transitions().size());
  for (int i = 0; i < static_cast<int>(g.transitions().size()); ++i)
    if (reach[g.transitions()[i].src]) alive.push_back(i);

  detail::StreettSearch search(g, pairs);
  auto w = search.solve(alive);
  if (w && !detail::replay_streett(g, pairs, *w))
    throw std::logic_error("streett_nonempty: witness failed replay");
  return w;
}

// A parity operand of a product emptiness question; `complemented` shifts its
// colors by one, i.e. asks for rejection instead of acceptance.
struct ParityOperand {
  const Automaton* aut;
  bool complemented;
};

// Product of the operands; nonempty iff some word is accepted by every plain
// operand and rejected by every complemented one. Witnesses are replayed
// against each operand before being returned.
inline std::optional<LassoWord> parity_product_nonempty(const std::vector<ParityOperand>& ops) {
  if (ops.empty()) throw std::invalid_argument("parity_product_nonempty: no operands");
  const Alphabet& sigma = ops.front().aut->alphabet();
  for (const auto& o : ops) {
    if (!o.aut->deterministic())
      throw std::invalid_argument("parity_product_nonempty: nondeterministic operand");
    if (!o.aut->valid()) throw std::invalid_argument("parity_product_nonempty: invalid operand");
    if (o.aut->alphabet() != sigma)
      throw std::invalid_argument("parity_product_nonempty: alphabet mismatch");
  }
  const int n = static_cast<int>(ops.size());

  std::vector<int> sizes;
  for (const auto& o : ops) sizes.push_back(o.aut->state_count());
  detail::TupleKey key(sizes);

  std::vector<std::vector<int>> states;
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::string> names;
  std::vector<Transition> ts;
  std::vector<int> opcolor;  // n colors per transition, flattened

  auto intern = [&](const std::vector<int>& tuple) {
    auto [it, fresh] = index.try_emplace(key(tuple), static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(tuple);
      std::string nm = "(";
      for (int i = 0; i < n; ++i) {
        if (i) nm += ',';
        nm += ops[i].aut->state_name(tuple[i]);
      }
      nm += ')';
      names.push_back(std::move(nm));
    }
    return it->second;
  };

  std::vector<int> init;
  for (const auto& o : ops) init.push_back(o.aut->initial());
  intern(init);
  for (int q = 0; q < static_cast<int>(states.size()); ++q) {
    const std::vector<int> cur = states[q];
    for (int l = 0; l < sigma.size(); ++l) {
      std::vector<int> nxt(n);
      for (int i = 0; i < n; ++i) {
        nxt[i] = ops[i].aut->step(cur[i], l);
        opcolor.push_back(ops[i].aut->color_at(cur[i], l) + (ops[i].complemented ? 1 : 0));
      }
      ts.push_back({q, l, intern(nxt), 0});
    }
  }

  // The product automaton's own colors are unused; acceptance is encoded as
  // Streett pairs over the per-operand colors. Transition order survives the
  // Automaton constructor because (src, letter) pairs are emitted sorted and
  // deterministic products have one transition per pair.
  Automaton prod(sigma, std::move(names), 0, std::move(ts));
  std::vector<StreettPair> pairs;
  for (int i = 0; i < n; ++i) {
    int maxc = 0;
    for (std::size_t t = 0; t < prod.transitions().size(); ++t)
      maxc = std::max(maxc, opcolor[t * n + i]);
    for (int c = 1; c <= maxc; c += 2) {
      StreettPair p;
      for (std::size_t t = 0; t < prod.transitions().size(); ++t) {
        const int tc = opcolor[t * n + i];
        if (tc == c) p.L.push_back(static_cast<int>(t));
        if (tc < c) p.U.push_back(static_cast<int>(t));
      }
      if (!p.L.empty()) pairs.push_back(std::move(p));
    }
  }

  auto w = streett_nonempty(prod, pairs);
  if (w) {
    for (const auto& o : ops)
      if (run_accepted(*o.aut, *w) == o.complemented)
        throw std::logic_error("parity_product_nonempty: witness failed operand replay");
  }
  return w;
}

// Witness in L(a) \ L(b), if any.
inline std::optional<LassoWord> dpw_diff_nonempty(const Automaton& a, const Automaton& b) {
  return parity_product_nonempty({{&a, false}, {&b, true}});
}

struct EquivResult {
  bool equivalent;
  std::optional<LassoWord> counterexample;
};

inline EquivResult dpw_equiv(const Automaton& a, const Automaton& b) {
  if (auto w = dpw_diff_nonempty(a, b)) return {false, w};
  if (auto w = dpw_diff_nonempty(b, a)) return {false, w};
  return {true, std::nullopt};
}

// Partition of the reachable states by language equivalence of the rebased
// automata. Cheap lasso probes pre-split the states; the same-bucket pairs
// are then decided exactly with a single shared pair product: a pair (p, q)
// is inequivalent iff from (p, q) or (q, p) the product admits a run that
// the first component accepts and the second rejects.
inline std::vector<std::vector<int>> residual_classes(const Automaton& a) {
  if (!a.deterministic()) throw std::invalid_argument("residual_classes: nondeterministic input");
  if (!a.valid()) throw std::invalid_argument("residual_classes: invalid automaton");
  const std::vector<int> reach = a.reachable();
  const int n = a.state_count();
  const int nl = a.alphabet().size();

  // probe signatures: all lassos with |period| <= 2, plus one-letter stems
  // when the automaton is small enough for that to be cheap
  std::vector<LassoWord> probes;
  std::vector<std::vector<int>> stems{{}};
  if (n <= 256)
    for (int l = 0; l < nl; ++l) stems.push_back({l});
  for (const auto& st : stems) {
    for (int l = 0; l < nl; ++l) probes.push_back({st, {l}});
    for (int l1 = 0; l1 < nl; ++l1)
      for (int l2 = 0; l2 < nl; ++l2) probes.push_back({st, {l1, l2}});
  }
  std::map<std::vector<char>, int> bucket_id;
  std::vector<int> bucket_of(n, -1);
  std::vector<std::vector<int>> bucket_members;
  for (int q : reach) {
    std::vector<char> sig;
    sig.reserve(probes.size());
    const Automaton rq = a.rebased(q);
    for (const auto& w : probes) sig.push_back(run_accepted(rq, w) ? 1 : 0);
    auto [it, fresh] = bucket_id.try_emplace(std::move(sig), static_cast<int>(bucket_id.size()));
    if (fresh) bucket_members.push_back({});
    bucket_of[q] = it->second;
    bucket_members[it->second].push_back(q);
  }

  // shared pair product over every ordered same-bucket pair
  std::vector<std::uint64_t> seeds;
  for (const auto& members : bucket_members)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if (i != j)
          seeds.push_back(static_cast<std::uint64_t>(members[i]) * n + members[j]);

  std::vector<char> pair_inequivalent;  // indexed like the product states
  std::unordered_map<std::uint64_t, int> index;
  if (!seeds.empty()) {
    std::vector<std::pair<int, int>> states;
    std::vector<Transition> ts;
    std::vector<std::pair<int, int>> opcolor;
    auto intern = [&](int p, int q) {
      auto [it, fresh] = index.try_emplace(static_cast<std::uint64_t>(p) * n + q,
                                           static_cast<int>(states.size()));
      if (fresh) states.emplace_back(p, q);
      return it->second;
    };
    for (std::uint64_t s : seeds) intern(static_cast<int>(s / n), static_cast<int>(s % n));
    for (int v = 0; v < static_cast<int>(states.size()); ++v) {
      const auto [p, q] = states[v];
      for (int l = 0; l < nl; ++l) {
        ts.push_back({v, l, intern(a.step(p, l), a.step(q, l)), 0});
        opcolor.emplace_back(a.color_at(p, l), a.color_at(q, l) + 1);
      }
    }
    std::vector<std::string> names(states.size());
    for (std::size_t v = 0; v < states.size(); ++v)
      names[v] = "(" + std::to_string(states[v].first) + "," + std::to_string(states[v].second) + ")";
    Automaton prod(a.alphabet(), std::move(names), 0, std::move(ts));

    std::vector<StreettPair> pairs;
    for (int side = 0; side < 2; ++side) {
      int maxc = 0;
      for (std::size_t t = 0; t < prod.transitions().size(); ++t)
        maxc = std::max(maxc, side == 0 ? opcolor[t].first : opcolor[t].second);
      for (int c = 1; c <= maxc; c += 2) {
        StreettPair sp;
        for (std::size_t t = 0; t < prod.transitions().size(); ++t) {
          const int tc = side == 0 ? opcolor[t].first : opcolor[t].second;
          if (tc == c) sp.L.push_back(static_cast<int>(t));
          if (tc < c) sp.U.push_back(static_cast<int>(t));
        }
        if (!sp.L.empty()) pairs.push_back(std::move(sp));
      }
    }
    pair_inequivalent = detail::streett_sat_states(prod, pairs);
  }

  auto differs = [&](int p, int q) {
    const auto it = index.find(static_cast<std::uint64_t>(p) * n + q);
    return it != index.end() && pair_inequivalent[it->second];
  };

  std::vector<std::vector<int>> classes;
  for (int q : reach) {
    bool placed = false;
    for (auto& cls : classes) {
      const int rep = cls.front();
      if (bucket_of[rep] != bucket_of[q]) continue;
      if (!differs(q, rep) && !differs(rep, q)) {
        cls.push_back(q);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({q});
  }
  return classes;
}

// SCCs of the sub-graph restricted to the given letters, filtered to those
// closed under the subset: no transition on a subset letter leaves the SCC.
inline std::vector<Scc> closed_subsccs(const Automaton& a, const std::vector<int>& letters) {
  if (!a.deterministic()) throw std::invalid_argument("closed_subsccs: nondeterministic input");
  if (!a.valid()) throw std::invalid_argument("closed_subsccs: invalid automaton");
  std::vector<char> in_subset(a.alphabet().size(), 0);
  for (int l : letters) {
    if (l < 0 || l >= a.alphabet().size())
      throw std::invalid_argument("closed_subsccs: letter outside the alphabet");
    in_subset[l] = 1;
  }
  const int n = a.state_count();
  std::vector<char> reach(n, 0);
  for (int q : a.reachable()) reach[q] = 1;

  std::vector<std::vector<int>> adj(n);
  for (const auto& t : a.transitions())
    if (in_subset[t.letter] && reach[t.src]) adj[t.src].push_back(t.dst);
  const auto scc = detail::tarjan_scc(n, adj);

  std::vector<Scc> comps(scc.count);
  for (int q = 0; q < n; ++q)
    if (reach[q]) comps[scc.comp[q]].states.push_back(q);
  for (const auto& t : a.transitions())
    if (in_subset[t.letter] && reach[t.src] && scc.comp[t.src] == scc.comp[t.dst])
      comps[scc.comp[t.src]].transitions.push_back(t);

  std::vector<Scc> out;
  for (auto& c : comps) {
    if (c.transitions.empty()) continue;
    bool closed = true;
    std::vector<char> member(n, 0);
    for (int q : c.states) member[q] = 1;
    for (int q : c.states) {
      for (int l = 0; l < a.alphabet().size() && closed; ++l) {
        if (!in_subset[l]) continue;
        for (const auto& t : a.out(q, l))
          if (!member[t.dst]) {
            closed = false;
            break;
          }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Scc& x, const Scc& y) { return x.states.front() < y.states.front(); });
  return out;
}

}  // namespace cocoa
