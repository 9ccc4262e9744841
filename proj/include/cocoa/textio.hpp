#pragma once

// Textual automaton/chain format and lasso literals.
//
// Grammar (line oriented; '#' starts a comment line, blank lines ignored):
//
//   aut NAME
//   alphabet: l1 l2 ...
//   states: s1 s2 ...
//   initial: s
//   src letter -> dst : color          (one line per transition)
//   end
//   cocoa NAME = aut1 aut2 ...
//
// Printing orders states breadth-first from the initial state and letters in
// alphabet order, so parse(print(x)) is structurally equal to x.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cocoa/automaton.hpp"
#include "cocoa/chain.hpp"

namespace cocoa {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int ln, const std::string& msg)
      : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct Document {
  std::vector<std::pair<std::string, Automaton>> automata;
  struct ChainDecl {
    std::string name;
    std::vector<std::string> element_names;
  };
  std::vector<ChainDecl> chains;

  const Automaton* find_automaton(const std::string& name) const {
    for (const auto& [n, a] : automata)
      if (n == name) return &a;
    return nullptr;
  }

  const ChainDecl* find_chain(const std::string& name) const {
    for (const auto& c : chains)
      if (c.name == name) return &c;
    return nullptr;
  }

  Cocoa build_chain(const ChainDecl& decl) const {
    std::vector<Automaton> elems;
    for (const auto& en : decl.element_names) {
      const Automaton* a = find_automaton(en);
      if (!a) throw std::invalid_argument("chain '" + decl.name + "': unknown element " + en);
      elems.push_back(*a);
    }
    return Cocoa(std::move(elems));
  }
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

}  // namespace detail

inline Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string line;
  int ln = 0;

  std::optional<std::string> cur_name;
  std::optional<Alphabet> cur_alphabet;
  std::vector<std::string> cur_states;
  bool have_states = false;
  std::optional<std::string> cur_initial;
  std::vector<Transition> cur_trans;

  auto state_id = [&](const std::string& name) {
    for (std::size_t i = 0; i < cur_states.size(); ++i)
      if (cur_states[i] == name) return static_cast<int>(i);
    return -1;
  };

  auto finish_block = [&](int end_line) {
    if (!cur_alphabet) throw ParseError(end_line, "automaton '" + *cur_name + "' has no alphabet section");
    if (!have_states) throw ParseError(end_line, "automaton '" + *cur_name + "' has no states section");
    if (!cur_initial) throw ParseError(end_line, "automaton '" + *cur_name + "' has no initial section");
    const int init = state_id(*cur_initial);
    try {
      doc.automata.emplace_back(*cur_name,
                                Automaton(*cur_alphabet, cur_states, init, cur_trans));
    } catch (const std::invalid_argument& e) {
      throw ParseError(end_line, std::string("automaton '") + *cur_name + "': " + e.what());
    }
    cur_name.reset();
    cur_alphabet.reset();
    cur_states.clear();
    have_states = false;
    cur_initial.reset();
    cur_trans.clear();
  };

  while (std::getline(in, line)) {
    ++ln;
    std::string trimmed = line;
    const auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') continue;
    const auto toks = detail::tokens_of(trimmed);

    if (!cur_name) {
      if (toks[0] == "aut") {
        if (toks.size() != 2) throw ParseError(ln, "expected: aut NAME");
        if (doc.find_automaton(toks[1])) throw ParseError(ln, "duplicate automaton '" + toks[1] + "'");
        cur_name = toks[1];
      } else if (toks[0] == "cocoa") {
        // cocoa NAME = a1 a2 ...
        if (toks.size() < 4 || toks[2] != "=") throw ParseError(ln, "expected: cocoa NAME = aut1 aut2 ...");
        Document::ChainDecl decl{toks[1], {toks.begin() + 3, toks.end()}};
        if (doc.find_chain(decl.name)) throw ParseError(ln, "duplicate chain '" + decl.name + "'");
        for (const auto& en : decl.element_names)
          if (!doc.find_automaton(en)) throw ParseError(ln, "unknown automaton '" + en + "' in chain");
        try {
          (void)doc.build_chain(decl);  // validates element shape and shared alphabet
        } catch (const std::invalid_argument& e) {
          throw ParseError(ln, e.what());
        }
        doc.chains.push_back(std::move(decl));
      } else {
        throw ParseError(ln, "expected 'aut' or 'cocoa', got '" + toks[0] + "'");
      }
      continue;
    }

    // inside an automaton block
    if (toks[0] == "alphabet:") {
      if (cur_alphabet) throw ParseError(ln, "duplicate alphabet section");
      if (toks.size() < 2) throw ParseError(ln, "empty alphabet");
      try {
        cur_alphabet = Alphabet({toks.begin() + 1, toks.end()});
      } catch (const std::invalid_argument& e) {
        throw ParseError(ln, e.what());
      }
    } else if (toks[0] == "states:") {
      if (have_states) throw ParseError(ln, "duplicate states section");
      if (toks.size() < 2) throw ParseError(ln, "empty state list");
      cur_states.assign(toks.begin() + 1, toks.end());
      for (std::size_t i = 0; i < cur_states.size(); ++i)
        for (std::size_t j = i + 1; j < cur_states.size(); ++j)
          if (cur_states[i] == cur_states[j])
            throw ParseError(ln, "duplicate state '" + cur_states[i] + "'");
      have_states = true;
    } else if (toks[0] == "initial:") {
      if (cur_initial) throw ParseError(ln, "duplicate initial section");
      if (toks.size() != 2) throw ParseError(ln, "expected: initial: STATE");
      if (!have_states) throw ParseError(ln, "initial section before states section");
      if (state_id(toks[1]) < 0) throw ParseError(ln, "unknown initial state '" + toks[1] + "'");
      cur_initial = toks[1];
    } else if (toks[0] == "end") {
      finish_block(ln);
    } else {
      // transition: src letter -> dst : color
      if (toks.size() != 6 || toks[2] != "->" || toks[4] != ":")
        throw ParseError(ln, "expected transition: src letter -> dst : color");
      if (!have_states) throw ParseError(ln, "transition before states section");
      if (!cur_alphabet) throw ParseError(ln, "transition before alphabet section");
      const int src = state_id(toks[0]);
      if (src < 0) throw ParseError(ln, "unknown state '" + toks[0] + "'");
      const int letter = cur_alphabet->index_of(toks[1]);
      if (letter < 0) throw ParseError(ln, "unknown letter '" + toks[1] + "'");
      const int dst = state_id(toks[3]);
      if (dst < 0) throw ParseError(ln, "unknown state '" + toks[3] + "'");
      int color = -1;
      try {
        std::size_t used = 0;
        color = std::stoi(toks[5], &used);
        if (used != toks[5].size()) color = -1;
      } catch (...) {
        color = -1;
      }
      if (color < 0) throw ParseError(ln, "bad color '" + toks[5] + "'");
      for (const auto& t : cur_trans)
        if (t.src == src && t.letter == letter && t.color != color)
          throw ParseError(ln, "conflicting colors for (" + toks[0] + ", " + toks[1] + ")");
      cur_trans.push_back({src, letter, dst, color});
    }
  }
  if (cur_name) throw ParseError(ln, "unterminated automaton block '" + *cur_name + "'");
  return doc;
}

// Breadth-first state order from the initial state; unreachable states keep
// their declaration order at the end.
inline std::vector<int> print_order(const Automaton& a) {
  std::vector<int> order = a.reachable();
  std::vector<char> seen(a.state_count(), 0);
  for (int q : order) seen[q] = 1;
  for (int q = 0; q < a.state_count(); ++q)
    if (!seen[q]) order.push_back(q);
  return order;
}

inline std::string print_automaton(const std::string& name, const Automaton& a) {
  std::ostringstream out;
  out << "aut " << name << "\n";
  out << "alphabet:";
  for (const auto& l : a.alphabet().letters) out << ' ' << l;
  out << "\nstates:";
  const std::vector<int> order = print_order(a);
  std::vector<int> pos(a.state_count(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (int q : order) out << ' ' << a.state_name(q);
  out << "\ninitial: " << a.state_name(a.initial()) << "\n";
  for (int q : order)
    for (int l = 0; l < a.alphabet().size(); ++l) {
      auto ts = a.out(q, l);
      std::vector<Transition> sorted(ts.begin(), ts.end());
      std::sort(sorted.begin(), sorted.end(),
                [&](const Transition& x, const Transition& y) { return pos[x.dst] < pos[y.dst]; });
      for (const auto& t : sorted)
        out << a.state_name(q) << ' ' << a.alphabet().name(l) << " -> " << a.state_name(t.dst)
            << " : " << t.color << "\n";
    }
  out << "end\n";
  return out.str();
}

inline std::string print_document(const Document& doc) {
  std::ostringstream out;
  for (const auto& [name, a] : doc.automata) out << print_automaton(name, a);
  for (const auto& c : doc.chains) {
    out << "cocoa " << c.name << " =";
    for (const auto& en : c.element_names) out << ' ' << en;
    out << "\n";
  }
  return out.str();
}

// Lasso literal: "stem ; period" with space-separated letters; an empty stem
// is written "; period".
inline LassoWord parse_lasso(const std::string& text, const Alphabet& sigma) {
  const auto semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
    throw std::invalid_argument("lasso literal: expected exactly one ';'");
  const auto stem_toks = detail::tokens_of(text.substr(0, semi));
  const auto period_toks = detail::tokens_of(text.substr(semi + 1));
  if (period_toks.empty()) throw std::invalid_argument("lasso literal: empty period");
  return make_lasso(sigma, stem_toks, period_toks);
}

inline std::string format_lasso(const LassoWord& w, const Alphabet& sigma) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.stem.size(); ++i) {
    if (i) out << ' ';
    out << sigma.name(w.stem[i]);
  }
  if (!w.stem.empty()) out << ' ';
  out << ';';
  for (int l : w.period) out << ' ' << sigma.name(l);
  return out.str();
}

}  // namespace cocoa
