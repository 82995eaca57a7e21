// Command-line front end. Exit codes: 0 true/valid/yes, 1 false/invalid/no,
// 2 usage or parse error, 3 model file error, 4 resource limit.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epistemic/decide.hpp"
#include "epistemic/dependence.hpp"
#include "epistemic/error.hpp"
#include "epistemic/formula.hpp"
#include "epistemic/model.hpp"
#include "epistemic/normal.hpp"
#include "epistemic/oracle.hpp"
#include "epistemic/parser.hpp"
#include "epistemic/reduce.hpp"
#include "epistemic/semantics.hpp"
#include "epistemic/translate.hpp"

namespace {

using namespace epi;

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kModel = 3, kResource = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

SemanticsMode parse_mode(const std::string& s) {
  return s == "km" ? SemanticsMode::KM : SemanticsMode::Yalcin;
}

WorldSet state_arg(const std::string& text, const Model& m) {
  try {
    return parse_world_list(text, m.world_count());
  } catch (const ModelError& e) {
    throw UsageError(std::string("--state: ") + e.what());
  }
}

std::vector<std::string> split_atoms(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (!is_valid_atom_name(item)) throw UsageError("invalid atom name '" + item + "'");
    out.push_back(item);
  }
  return out;
}

void print_context(std::ostream& os, const Countermodel& c) {
  os << render_model(c.model);
  os << "# context: world=" << c.context.world << " state=" << render_world_list(c.context.state)
     << "\n";
}

int report(const Verdict& v, const char* yes, const char* no) {
  std::cout << (v.decided ? yes : no) << "\n";
  if (v.witness) print_context(std::cout, *v.witness);
  return v.decided ? kYes : kNo;
}

void print_metrics(const char* label, const Formula& f) {
  FormulaMetrics m = metrics(f);
  std::cout << label << ": nodes=" << m.node_count << " depth=" << m.modal_depth
            << " conditionals=" << m.conditional_count << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Epistemic modals and indicative conditionals workbench"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string formula, semantics = "yalcin", model_path, state, target, on, form = "dnf";
  std::string simplification = "auto", atoms, equiv, other;
  std::vector<std::string> premises;
  int world = 0, max_worlds = 3;
  std::size_t max_n = 8;
  bool stats = false, csv = false, simplify = false;

  auto add_formula = [&](CLI::App* sub) {
    sub->add_option("formula", formula, "formula in concrete syntax")->required();
  };
  auto add_semantics = [&](CLI::App* sub) {
    sub->add_option("--semantics", semantics, "reading of '=>'")
        ->check(CLI::IsMember({"yalcin", "km"}));
  };

  auto* parse_cmd = app.add_subcommand("parse", "print the canonical form and size metrics");
  add_formula(parse_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate at a pointed context");
  eval_cmd->add_option("--model", model_path, "model file")->required();
  eval_cmd->add_option("--world", world, "world index")->required();
  eval_cmd->add_option("--state", state, "comma-separated world indices")->required();
  add_semantics(eval_cmd);
  add_formula(eval_cmd);

  auto* valid_cmd = app.add_subcommand("valid", "decide validity");
  add_semantics(valid_cmd);
  add_formula(valid_cmd);

  auto* theorem_cmd = app.add_subcommand("theorem", "decide theoremhood in the Yalcin logic");
  add_formula(theorem_cmd);

  auto* cons_cmd = app.add_subcommand("consequence", "decide informational consequence");
  cons_cmd->add_option("--premise", premises, "premise (repeatable)");
  add_formula(cons_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "eliminate conditionals (Yalcin reading)");
  add_formula(reduce_cmd);

  auto* nf_cmd = app.add_subcommand("nf", "K45 depth-one normal form");
  nf_cmd->add_option("--form", form, "dnf or cnf")->check(CLI::IsMember({"dnf", "cnf"}));
  nf_cmd->add_option("--simplify", simplification, "component simplification")
      ->check(CLI::IsMember({"auto", "syntactic", "semantic"}));
  add_formula(nf_cmd);

  auto* translate_cmd =
      app.add_subcommand("translate", "translate to a conditional-free formula (KM reading)");
  translate_cmd->add_flag("--stats", stats, "print size metrics of input and output");
  translate_cmd->add_flag("--simplify", simplify, "fold bot/~bot constants in the output");
  add_formula(translate_cmd);

  auto* depend_cmd = app.add_subcommand("depend", "check whether a target depends on a basis");
  depend_cmd->add_option("--model", model_path, "model file")->required();
  depend_cmd->add_option("--state", state, "comma-separated world indices")->required();
  depend_cmd->add_option("--target", target, "target atom")->required();
  depend_cmd->add_option("--on", on, "comma-separated basis atoms")->required();

  auto* bench_cmd = app.add_subcommand("bench-succinct", "formula sizes for the dependence family");
  bench_cmd->add_option("--max-n", max_n, "largest basis size")->required();
  bench_cmd->add_flag("--csv", csv, "CSV output");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "compare two formulas on all small models");
  oracle_cmd->add_option("--max-worlds", max_worlds, "largest model size")
      ->check(CLI::Range(1, 4));
  oracle_cmd->add_option("--atoms", atoms, "comma-separated atoms (default: those occurring)");
  add_semantics(oracle_cmd);
  oracle_cmd->add_option("left", formula, "first formula")->required();
  oracle_cmd->add_option("equiv", equiv, "the word 'equiv'")->required();
  oracle_cmd->add_option("right", other, "second formula")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const SemanticsMode mode = parse_mode(semantics);

  if (*parse_cmd) {
    Formula f = parse(formula);
    std::cout << render(f) << "\n";
    FormulaMetrics m = metrics(f);
    std::cout << "nodes: " << m.node_count << "\nmodal depth: " << m.modal_depth
              << "\nconditionals: " << m.conditional_count << "\n";
    return kYes;
  }
  if (*eval_cmd) {
    Formula f = parse(formula);
    Model m = load_model(model_path);
    if (world < 0 || world >= m.world_count()) {
      throw UsageError("--world " + std::to_string(world) + " is not a world of the model");
    }
    bool v = eval(m, {world, state_arg(state, m)}, f, mode);
    std::cout << (v ? "true" : "false") << "\n";
    return v ? kYes : kNo;
  }
  if (*valid_cmd) {
    Formula f = parse(formula);
    return report(mode == SemanticsMode::KM ? km_valid(f) : yalcin_theorem(f), "VALID", "INVALID");
  }
  if (*theorem_cmd) {
    return report(yalcin_theorem(parse(formula)), "THEOREM", "NOT A THEOREM");
  }
  if (*cons_cmd) {
    std::vector<Formula> ps;
    for (const std::string& p : premises) ps.push_back(parse(p));
    return report(informational_consequence(ps, parse(formula)), "YES", "NO");
  }
  if (*reduce_cmd) {
    std::cout << render(eliminate_conditionals(parse(formula))) << "\n";
    return kYes;
  }
  if (*nf_cmd) {
    Formula f = parse(formula);
    NormalFormOptions opts;
    if (simplification == "syntactic") opts.simplification = Simplification::Syntactic;
    if (simplification == "semantic") opts.simplification = Simplification::Semantic;
    Formula out = form == "dnf" ? dnf_to_formula(to_k45_dnf(f, opts))
                                : cnf_to_formula(to_k45_cnf(f, opts));
    std::cout << render(out) << "\n";
    return kYes;
  }
  if (*translate_cmd) {
    Formula f = parse(formula);
    Formula out = dagger(f, {simplify});
    std::cout << render(out) << "\n";
    if (stats) {
      print_metrics("input", f);
      print_metrics("output", out);
    }
    return kYes;
  }
  if (*depend_cmd) {
    Model m = load_model(model_path);
    DependenceQuery q{target, split_atoms(on)};
    try {
      q.validate();
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
    bool v = depends_on(m, state_arg(state, m), q);
    std::cout << (v ? "true" : "false") << "\n";
    return v ? kYes : kNo;
  }
  if (*bench_cmd) {
    if (max_n == 0 || max_n > kMaxSuccinctnessN) {
      throw UsageError("--max-n must be between 1 and " + std::to_string(kMaxSuccinctnessN));
    }
    auto rows = succinctness_report(max_n);
    if (csv) {
      std::cout << "n,depend_nodes,expo_nodes,dagger_nodes\n";
      for (const auto& r : rows) {
        std::cout << r.n << "," << r.depend_nodes << "," << r.expo_nodes << ",";
        if (r.dagger_nodes) std::cout << *r.dagger_nodes;
        std::cout << "\n";
      }
    } else {
      std::cout << std::setw(3) << "n" << std::setw(14) << "depend_nodes" << std::setw(14)
                << "expo_nodes" << std::setw(22) << "dagger_nodes" << "\n";
      for (const auto& r : rows) {
        std::cout << std::setw(3) << r.n << std::setw(14) << r.depend_nodes << std::setw(14)
                  << r.expo_nodes << std::setw(22)
                  << (r.dagger_nodes ? std::to_string(*r.dagger_nodes) : "-") << "\n";
      }
    }
    return kYes;
  }
  if (*oracle_cmd) {
    if (equiv != "equiv") throw UsageError("expected: <f1> equiv <f2>");
    Formula f = parse(formula), g = parse(other);
    SearchBounds bounds;
    bounds.max_worlds = max_worlds;
    if (atoms.empty()) {
      bounds.atoms = atoms_of(conj(f, g));
    } else {
      bounds.atoms = split_atoms(atoms);
    }
    if (bounds.atoms.size() > 4) throw ResourceLimit("oracle-check handles at most 4 atoms");
    auto hit = disagreement_search(f, mode, g, mode, bounds);
    if (!hit) {
      std::cout << "EQUIVALENT\n";
      return kYes;
    }
    std::cout << "DIFFERENT\n";
    print_context(std::cout, *hit);
    std::cout << "# left=" << (eval(hit->model, hit->context, f, mode) ? "true" : "false")
              << " right=" << (eval(hit->model, hit->context, g, mode) ? "true" : "false") << "\n";
    return kNo;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const epi::SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const epi::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const epi::ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kModel;
  } catch (const epi::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  }
}
