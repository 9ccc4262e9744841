// cocoa-kit: generation, Boolean operations, checks, and size tables for
// chains of co-Buchi automata and deterministic parity automata.
//
// Exit status: 0 on success / passing check, 1 on failing check, 2 on usage
// or input errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cocoa/analysis.hpp"
#include "cocoa/automaton.hpp"
#include "cocoa/boolops.hpp"
#include "cocoa/chain.hpp"
#include "cocoa/families.hpp"
#include "cocoa/sampling.hpp"
#include "cocoa/textio.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cocoa::Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return cocoa::parse_document(buf.str());
  } catch (const cocoa::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

const cocoa::Automaton& sole_automaton(const cocoa::Document& doc, const std::string& name,
                                       const std::string& where) {
  if (!name.empty()) {
    const cocoa::Automaton* a = doc.find_automaton(name);
    if (!a) throw UsageError(where + ": no automaton named '" + name + "'");
    return *a;
  }
  if (doc.automata.size() != 1)
    throw UsageError(where + ": expected exactly one automaton (use --name)");
  return doc.automata.front().second;
}

cocoa::Cocoa sole_chain(const cocoa::Document& doc, const std::string& name,
                        const std::string& where) {
  if (!name.empty()) {
    const auto* c = doc.find_chain(name);
    if (!c) throw UsageError(where + ": no chain named '" + name + "'");
    return doc.build_chain(*c);
  }
  if (doc.chains.size() != 1)
    throw UsageError(where + ": expected exactly one chain (use --name)");
  return doc.build_chain(doc.chains.front());
}

cocoa::Document chain_document(const std::string& name, const cocoa::Cocoa& chain) {
  cocoa::Document doc;
  cocoa::Document::ChainDecl decl{name, {}};
  for (int i = 0; i < chain.size(); ++i) {
    std::string en = name + "_" + std::to_string(i + 1);
    doc.automata.emplace_back(en, chain.elements()[i]);
    decl.element_names.push_back(std::move(en));
  }
  doc.chains.push_back(std::move(decl));
  return doc;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run_gen(const std::string& family, int k, const std::string& out_path) {
  cocoa::GenOutput g = cocoa::gen({family, k});
  cocoa::Document doc;
  for (auto& [name, a] : g.automata) doc.automata.emplace_back(name, a);
  for (auto& c : g.chains) doc.chains.push_back({c.name, c.element_names});
  write_output(out_path, cocoa::print_document(doc));
  return 0;
}

int run_eval(const std::string& input, const std::string& name, const std::string& lasso) {
  const cocoa::Document doc = load_document(input);
  // a named or unique chain wins; otherwise a unique automaton
  const cocoa::Document::ChainDecl* chain = nullptr;
  const cocoa::Automaton* aut = nullptr;
  if (!name.empty()) {
    chain = doc.find_chain(name);
    if (!chain) aut = doc.find_automaton(name);
    if (!chain && !aut) throw UsageError("eval: no value named '" + name + "'");
  } else if (doc.chains.size() == 1) {
    chain = &doc.chains.front();
  } else if (doc.chains.empty() && doc.automata.size() == 1) {
    aut = &doc.automata.front().second;
  } else {
    throw UsageError("eval: input holds several values (use --name)");
  }

  if (chain) {
    const cocoa::Cocoa c = doc.build_chain(*chain);
    const cocoa::LassoWord w = cocoa::parse_lasso(lasso, c.alphabet());
    const auto verdict = cocoa::cocoa_eval(c, w);
    std::cout << "level=" << verdict.level << " member=" << (verdict.member ? "true" : "false")
              << "\n";
    return 0;
  }
  const cocoa::LassoWord w = cocoa::parse_lasso(lasso, aut->alphabet());
  if (aut->deterministic()) {
    const auto r = cocoa::run_deterministic(*aut, w);
    std::cout << "dominating_color=" << r.dominating_color
              << " accepted=" << (r.accepted ? "true" : "false") << "\n";
    return 0;
  }
  if (aut->cobuchi()) {
    const bool acc = cocoa::accepts_lasso_cobuchi(*aut, w);
    std::cout << "accepted=" << (acc ? "true" : "false") << "\n";
    return 0;
  }
  throw UsageError("eval: nondeterministic non-co-Buchi automata cannot be evaluated");
}

int run_op(const std::string& operation, const std::vector<std::string>& inputs,
           const std::string& name, const std::string& out_path) {
  if (inputs.empty()) throw UsageError("op: at least one --input file required");
  std::vector<cocoa::Document> docs;
  for (const auto& p : inputs) docs.push_back(load_document(p));

  auto all_automata = [&]() {
    std::vector<cocoa::Automaton> as;
    for (const auto& d : docs)
      for (const auto& [n, a] : d.automata) as.push_back(a);
    return as;
  };
  auto all_chains = [&]() {
    std::vector<cocoa::Cocoa> cs;
    for (const auto& d : docs)
      for (const auto& decl : d.chains) cs.push_back(d.build_chain(decl));
    return cs;
  };

  cocoa::Document out;
  if (operation == "conj") {
    out.automata.emplace_back("conj", cocoa::dcw_conjunction(all_automata()));
  } else if (operation == "disj") {
    out.automata.emplace_back("disj", cocoa::dcw_disjunction(all_automata()));
  } else if (operation == "determinize") {
    out.automata.emplace_back("det",
                              cocoa::ncw_determinize(sole_automaton(docs.front(), name, "op")));
  } else if (operation == "complement") {
    out.automata.emplace_back("compl",
                              cocoa::dpw_complement(sole_automaton(docs.front(), name, "op")));
  } else if (operation == "to-dpw") {
    out.automata.emplace_back("dpw", cocoa::cocoa_to_dpw(sole_chain(docs.front(), name, "op")));
  } else if (operation == "cocoa-conj" || operation == "cocoa-disj") {
    const auto cs = all_chains();
    if (cs.size() != 2) throw UsageError("op " + operation + ": expected exactly two chains");
    const cocoa::Cocoa r = operation == "cocoa-conj"
                               ? cocoa::cocoa_conjunction_gamma(cs[0], cs[1])
                               : cocoa::cocoa_demorgan_disjunction(cs[0], cs[1]);
    out = chain_document(operation == "cocoa-conj" ? "conj" : "disj", r);
  } else if (operation == "cocoa-complement") {
    out = chain_document("compl",
                         cocoa::cocoa_demorgan_complement(sole_chain(docs.front(), name, "op")));
  } else {
    throw UsageError("op: unknown operation '" + operation + "'");
  }
  write_output(out_path, cocoa::print_document(out));
  return 0;
}

int run_check(const std::string& kind, const std::vector<std::string>& args,
              const std::string& letters_csv, const std::string& input, const std::string& name,
              const std::string& lasso, int max_inject_len, int max_depth) {
  if (kind == "equiv") {
    if (args.size() != 2) throw UsageError("check equiv: expected two files");
    const cocoa::Document da = load_document(args[0]);
    const cocoa::Document db = load_document(args[1]);
    const cocoa::Automaton& a = sole_automaton(da, "", "check equiv");
    const cocoa::Automaton& b = sole_automaton(db, "", "check equiv");
    const auto r = cocoa::dpw_equiv(a, b);
    if (r.equivalent) {
      std::cout << "equivalent\n";
      return 0;
    }
    std::cout << "different: " << cocoa::format_lasso(*r.counterexample, a.alphabet()) << "\n";
    return 1;
  }
  if (kind == "empty") {
    if (args.size() != 1) throw UsageError("check empty: expected one file");
    const cocoa::Document d = load_document(args[0]);
    const cocoa::Automaton& a = sole_automaton(d, name, "check empty");
    const auto w = cocoa::parity_product_nonempty({{&a, false}});
    if (!w) {
      std::cout << "empty\n";
      return 0;
    }
    std::cout << "nonempty: " << cocoa::format_lasso(*w, a.alphabet()) << "\n";
    return 1;
  }
  if (kind == "chain") {
    if (args.size() != 1) throw UsageError("check chain: expected one file");
    const cocoa::Document d = load_document(args[0]);
    const cocoa::Cocoa c = sole_chain(d, name, "check chain");
    const auto report = cocoa::check_chain(c);
    for (const auto& p : report.pairs) {
      std::cout << "pair " << p.index << ": ";
      if (!p.inclusion_ok)
        std::cout << "inclusion FAILED, witness "
                  << cocoa::format_lasso(*p.inclusion_witness, c.alphabet());
      else if (!p.strict)
        std::cout << "inclusion ok, NOT strict";
      else
        std::cout << "strict inclusion ok, witness "
                  << cocoa::format_lasso(*p.strictness_witness, c.alphabet());
      std::cout << "\n";
    }
    return report.ok() ? 0 : 1;
  }
  if (kind == "residuals") {
    if (args.size() != 1) throw UsageError("check residuals: expected one file");
    const cocoa::Document d = load_document(args[0]);
    const cocoa::Automaton& a = sole_automaton(d, name, "check residuals");
    std::cout << cocoa::residual_classes(a).size() << "\n";
    return 0;
  }
  if (kind == "subscc") {
    if (args.size() != 1) throw UsageError("check subscc: expected one file");
    if (letters_csv.empty()) throw UsageError("check subscc: --letters required");
    const cocoa::Document d = load_document(args[0]);
    const cocoa::Automaton& a = sole_automaton(d, name, "check subscc");
    std::vector<int> letters;
    for (const auto& lname : split_csv(letters_csv)) {
      const int id = a.alphabet().index_of(lname);
      if (id < 0) throw UsageError("check subscc: unknown letter '" + lname + "'");
      letters.push_back(id);
    }
    for (const auto& scc : cocoa::closed_subsccs(a, letters)) {
      std::cout << "{";
      for (std::size_t i = 0; i < scc.states.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << a.state_name(scc.states[i]);
      }
      std::cout << "}\n";
    }
    return 0;
  }
  if (kind == "natural-color") {
    if (input.empty()) throw UsageError("check natural-color: --input required");
    if (lasso.empty()) throw UsageError("check natural-color: --lasso required");
    const cocoa::Document d = load_document(input);
    const cocoa::Automaton& ref = sole_automaton(d, name, "check natural-color");
    const cocoa::LassoWord w = cocoa::parse_lasso(lasso, ref.alphabet());
    const auto verdict = cocoa::natural_color_probe(ref, w, max_inject_len, max_depth);
    std::cout << "certified_lower_bound=" << verdict.certified_lower_bound << "\n";
    for (std::size_t i = 0; i < verdict.toggle_chain.size(); ++i) {
      const auto& step = verdict.toggle_chain[i];
      std::cout << "toggle " << i + 1 << ": inject";
      for (int l : step.injected) std::cout << ' ' << ref.alphabet().name(l);
      std::cout << " at every period position -> "
                << cocoa::format_lasso(step.result, ref.alphabet()) << " [color "
                << step.color_before << " -> " << step.color_after << "]\n";
    }
    return 0;
  }
  throw UsageError("check: unknown kind '" + kind + "'");
}

int run_table(const std::string& family, int kmax, const std::string& out_path) {
  if (kmax < 1) throw UsageError("table: --kmax must be positive");
  std::ostringstream out;
  out << "# k\tcocoa_states\tdpw_states\tresidual_count\telapsed_ms\n";
  for (int k = 1; k <= kmax; ++k) {
    const auto start = std::chrono::steady_clock::now();
    cocoa::Cocoa chain = [&]() {
      if (family == "Ck") return cocoa::gen_ck(k);
      if (family == "Lk") return cocoa::gen_lk(k);
      if (family == "conj") return cocoa::cocoa_conjunction_gamma(cocoa::gen_lk(k), cocoa::gen_lhat(k));
      if (family == "comp") return cocoa::gen_comp_family(k);
      throw UsageError("table: unknown family '" + family + "'");
    }();
    const cocoa::Automaton dpw = cocoa::cocoa_to_dpw(chain);
    const std::size_t residuals = cocoa::residual_classes(dpw).size();
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    out << k << '\t' << chain.total_states() << '\t' << dpw.state_count() << '\t' << residuals
        << '\t' << elapsed << "\n";
  }
  write_output(out_path, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cocoa-kit: chains of co-Buchi automata toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate an automaton or chain family");
  std::string gen_family;
  int gen_k = 1;
  std::string gen_out;
  gen_cmd->add_option("family", gen_family,
                      "fig1|fig2|minparity|Ck|Lk|Lhat|Pk|comp_family|L0hat|ncw_fixture")
      ->required();
  gen_cmd->add_option("--k", gen_k, "family parameter (default 1)");
  gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a lasso word");
  std::string eval_input, eval_name, eval_lasso;
  eval_cmd->add_option("--input", eval_input, "automaton/chain file")->required();
  eval_cmd->add_option("--name", eval_name, "value name inside the file");
  eval_cmd->add_option("--lasso", eval_lasso, "lasso literal \"stem ; period\"")->required();

  // op
  auto* op_cmd = app.add_subcommand("op", "apply an operation");
  std::string op_name;
  std::vector<std::string> op_inputs;
  std::string op_value_name, op_out;
  op_cmd->add_option("operation", op_name,
                     "conj|disj|determinize|complement|to-dpw|cocoa-conj|cocoa-disj|cocoa-complement")
      ->required();
  op_cmd->add_option("--input", op_inputs, "input file(s)")->required();
  op_cmd->add_option("--name", op_value_name, "value name inside the (first) file");
  op_cmd->add_option("-o,--output", op_out, "output file (default stdout)");

  // check
  auto* check_cmd = app.add_subcommand("check", "run a verification query");
  std::string check_kind, check_letters, check_input, check_name, check_lasso;
  int check_inject_len = 2, check_depth = 4;
  std::vector<std::string> check_args;
  check_cmd->add_option("kind", check_kind, "equiv|empty|chain|residuals|subscc|natural-color")
      ->required();
  check_cmd->add_option("files", check_args, "positional file arguments");
  check_cmd->add_option("--letters", check_letters, "comma-separated letters (subscc)");
  check_cmd->add_option("--input", check_input, "reference file (natural-color)");
  check_cmd->add_option("--name", check_name, "value name inside the file");
  check_cmd->add_option("--lasso", check_lasso, "lasso literal (natural-color)");
  check_cmd->add_option("--max-inject-len", check_inject_len, "max injected word length");
  check_cmd->add_option("--max-depth", check_depth, "max toggle chain length");

  // table
  auto* table_cmd = app.add_subcommand("table", "emit a conciseness table");
  std::string table_what, table_family, table_out;
  int table_kmax = 3;
  table_cmd->add_option("what", table_what, "conciseness")->required();
  table_cmd->add_option("--family", table_family, "Ck|Lk|conj|comp")->required();
  table_cmd->add_option("--kmax", table_kmax, "largest k")->required();
  table_cmd->add_option("-o,--output", table_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen_family, gen_k, gen_out);
    if (eval_cmd->parsed()) return run_eval(eval_input, eval_name, eval_lasso);
    if (op_cmd->parsed()) return run_op(op_name, op_inputs, op_value_name, op_out);
    if (check_cmd->parsed())
      return run_check(check_kind, check_args, check_letters, check_input, check_name,
                       check_lasso, check_inject_len, check_depth);
    if (table_cmd->parsed()) {
      if (table_what != "conciseness") throw UsageError("table: unknown table '" + table_what + "'");
      return run_table(table_family, table_kmax, table_out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
