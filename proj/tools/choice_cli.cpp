// Copyright 2026 The Choice Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front-end. Everything goes through the C interface in
// choice.h; no core headers are used here.
//
// Exit codes: 0 success (or entailed), 1 not entailed / failed checks,
// 2 usage or parse error, 3 enumeration cap exceeded, 130 interactive
// session aborted.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "choice.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitAborted = 130;

int exit_code(choice_status s) {
  switch (s) {
    case CHOICE_OK:
      return kExitOk;
    case CHOICE_ERR_CAP:
      return kExitCap;
    default:
      return kExitUsage;
  }
}

int complain(choice_status s) {
  std::cerr << "error: " << choice_last_error() << "\n";
  return exit_code(s);
}

struct FormulaHandle {
  choice_formula* p = nullptr;
  ~FormulaHandle() { choice_formula_free(p); }
};

struct GameHandle {
  choice_game* p = nullptr;
  ~GameHandle() { choice_game_free(p); }
};

struct StringHandle {
  char* p = nullptr;
  ~StringHandle() { choice_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

choice_semantics to_semantics(const std::string& name) {
  if (name == "qcl") return CHOICE_SEM_QCL;
  if (name == "pqcl") return CHOICE_SEM_PQCL;
  return CHOICE_SEM_GCL;
}

// ---------------------------------------------------------------------------
// Subcommand state and runners
// ---------------------------------------------------------------------------

struct Args {
  std::string formula;
  std::string premise;
  std::string conclusion;
  std::string interp;
  std::string sem = "qcl";
  std::string sems = "qcl";
  std::string variant = "g";
  std::string side = "me";
  std::string out_path;
  bool show_value = false;
  bool show_dot = false;
  bool show_strategy = false;
  bool auto_play = false;
  int cap = 20;
  unsigned long long seed = 1;
  int count = 500;
  int max_connectives = 8;
  int max_vars = 4;
};

int run_eval(const Args& a) {
  FormulaHandle f;
  if (choice_status s = choice_formula_parse(a.formula.c_str(), &f.p))
    return complain(s);
  StringHandle degree;
  if (choice_status s = choice_eval(f.p, to_semantics(a.sem),
                                    a.interp.c_str(), &degree.p))
    return complain(s);
  std::cout << degree.str() << "\n";
  return kExitOk;
}

int run_table(const Args& a) {
  FormulaHandle f;
  if (choice_status s = choice_formula_parse(a.formula.c_str(), &f.p))
    return complain(s);

  std::vector<std::string> sems;
  std::stringstream ss(a.sems);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item != "qcl" && item != "pqcl" && item != "gcl") {
      std::cerr << "error: unknown semantics '" << item << "'\n";
      return kExitUsage;
    }
    sems.push_back(item);
  }
  if (sems.empty()) {
    std::cerr << "error: no semantics selected\n";
    return kExitUsage;
  }

  unsigned long long rows = 0;
  if (choice_status s = choice_interp_count(f.p, a.cap, &rows))
    return complain(s);

  std::cout << "interp";
  for (const auto& sem : sems) std::cout << " | " << sem;
  std::cout << "\n";
  for (unsigned long long r = 0; r < rows; ++r) {
    StringHandle csv;
    if (choice_status s = choice_interp_at(f.p, r, &csv.p)) return complain(s);
    std::cout << "{" << csv.str() << "}";
    for (const auto& sem : sems) {
      StringHandle degree;
      if (choice_status s = choice_eval(f.p, to_semantics(sem), csv.p,
                                        &degree.p))
        return complain(s);
      std::cout << " | " << degree.str();
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_preferred(const Args& a) {
  FormulaHandle f;
  if (choice_status s = choice_formula_parse(a.formula.c_str(), &f.p))
    return complain(s);
  StringHandle text;
  if (choice_status s =
          choice_preferred(f.p, to_semantics(a.sem), a.cap, &text.p))
    return complain(s);
  std::cout << text.str();
  return kExitOk;
}

int run_game(const Args& a) {
  FormulaHandle f;
  if (choice_status s = choice_formula_parse(a.formula.c_str(), &f.p))
    return complain(s);
  GameHandle g;
  choice_variant variant = a.variant == "g" ? CHOICE_GAME_G : CHOICE_GAME_NG;
  if (choice_status s = choice_game_build(f.p, variant, &g.p))
    return complain(s);

  bool any = a.show_value || a.show_dot || a.show_strategy;
  if (a.show_value || !any) {
    StringHandle value;
    if (choice_status s =
            choice_game_value(g.p, a.interp.c_str(), &value.p))
      return complain(s);
    std::cout << value.str() << "\n";
  }
  if (a.show_strategy) {
    StringHandle trace;
    if (choice_status s =
            choice_game_strategy(g.p, a.interp.c_str(), &trace.p))
      return complain(s);
    std::cout << trace.str();
  }
  if (a.show_dot) {
    StringHandle dot;
    if (choice_status s = choice_game_dot(g.p, a.interp.c_str(), &dot.p))
      return complain(s);
    if (a.out_path.empty()) {
      std::cout << dot.str();
    } else {
      std::ofstream out(a.out_path);
      if (!out) {
        std::cerr << "error: cannot write '" << a.out_path << "'\n";
        return kExitUsage;
      }
      out << dot.str();
    }
  }
  return kExitOk;
}

int run_entail(const Args& a) {
  FormulaHandle premise, conclusion;
  if (choice_status s = choice_formula_parse(a.premise.c_str(), &premise.p))
    return complain(s);
  if (choice_status s =
          choice_formula_parse(a.conclusion.c_str(), &conclusion.p))
    return complain(s);
  int holds = 0;
  if (choice_status s = choice_entails(premise.p, conclusion.p, a.cap, &holds))
    return complain(s);
  std::cout << (holds ? "entailed" : "not entailed") << "\n";
  return holds ? kExitOk : kExitNo;
}

int run_check(const Args& a) {
  StringHandle report;
  int all_passed = 0;
  if (choice_status s = choice_check_run(a.seed, a.count, a.max_connectives,
                                         a.max_vars, &report.p, &all_passed))
    return complain(s);
  std::cout << report.str();
  return all_passed ? kExitOk : kExitNo;
}

// One move of the interactive loop; returns the chosen child index or -1
// on end of input.
int prompt_move(int n_children) {
  while (true) {
    std::cout << "move> " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) return -1;
    try {
      int k = std::stoi(line);
      if (k >= 1 && k <= n_children) return k - 1;
    } catch (const std::exception&) {
    }
    std::cout << "enter a number between 1 and " << n_children << "\n";
  }
}

int run_play(const Args& a) {
  FormulaHandle f;
  if (choice_status s = choice_formula_parse(a.formula.c_str(), &f.p))
    return complain(s);
  GameHandle g;
  choice_variant variant = a.variant == "g" ? CHOICE_GAME_G : CHOICE_GAME_NG;
  if (choice_status s = choice_game_build(f.p, variant, &g.p))
    return complain(s);

  StringHandle shown;
  if (choice_status s = choice_formula_print(f.p, &shown.p))
    return complain(s);
  std::cout << "game " << a.variant << " on '" << shown.str() << "' over {"
            << a.interp << "}\n";

  int node = 0;
  while (true) {
    char kind = 0;
    StringHandle caption;
    int n_children = 0;
    if (choice_status s =
            choice_game_node_info(g.p, node, &kind, &caption.p, &n_children))
      return complain(s);

    if (kind == 'L') {
      StringHandle payoff;
      int winning = 0;
      if (choice_status s = choice_game_leaf_payoff(
              g.p, node, a.interp.c_str(), &payoff.p, &winning))
        return complain(s);
      std::cout << "outcome " << caption.str() << " payoff " << payoff.str()
                << " (" << (winning ? "winning" : "losing") << ")\n";
      return kExitOk;
    }

    std::cout << "[" << kind << "] " << caption.str() << "\n";
    for (int k = 0; k < n_children; ++k) {
      int child = 0;
      if (choice_status s = choice_game_node_child(g.p, node, k, &child))
        return complain(s);
      char ck = 0;
      StringHandle ccap;
      int cn = 0;
      if (choice_status s =
              choice_game_node_info(g.p, child, &ck, &ccap.p, &cn))
        return complain(s);
      std::cout << "  " << (k + 1) << ": " << ccap.str() << "\n";
    }

    bool humans_turn = !a.auto_play && ((kind == 'I') == (a.side == "me"));
    int pick;
    if (humans_turn) {
      pick = prompt_move(n_children);
      if (pick < 0) {
        std::cout << "aborted\n";
        return kExitAborted;
      }
    } else {
      if (choice_status s = choice_game_optimal_child(g.p, a.interp.c_str(),
                                                      node, &pick))
        return complain(s);
      std::cout << "engine moves " << (pick + 1) << "\n";
    }
    if (choice_status s = choice_game_node_child(g.p, node, pick, &node))
      return complain(s);
  }
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  CLI::App app{"Qualitative choice logic: degrees, preferred models and "
               "evaluation games"};
  app.require_subcommand(1);

  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", a.cap, "Variable cap for enumerations")
        ->capture_default_str();
  };

  CLI::App* eval = app.add_subcommand("eval", "Degree of a formula");
  eval->add_option("formula", a.formula, "Formula text")->required();
  eval->add_option("--interp", a.interp, "Comma-separated variables");
  eval->add_option("--sem", a.sem, "qcl, pqcl or gcl")
      ->check(CLI::IsMember({"qcl", "pqcl", "gcl"}))
      ->capture_default_str();

  CLI::App* table = app.add_subcommand("table", "Degree truth table");
  table->add_option("formula", a.formula, "Formula text")->required();
  table->add_option("--sem", a.sems, "Comma-separated semantics columns")
      ->capture_default_str();
  add_cap(table);

  CLI::App* preferred =
      app.add_subcommand("preferred", "Preferred models of a formula");
  preferred->add_option("formula", a.formula, "Formula text")->required();
  preferred->add_option("--sem", a.sem, "qcl or gcl")
      ->check(CLI::IsMember({"qcl", "gcl"}))
      ->capture_default_str();
  add_cap(preferred);

  CLI::App* game = app.add_subcommand("game", "Build and solve a game");
  game->add_option("formula", a.formula, "Formula text")->required();
  game->add_option("--variant", a.variant, "g or ng")
      ->check(CLI::IsMember({"g", "ng"}))
      ->capture_default_str();
  game->add_option("--interp", a.interp, "Comma-separated variables");
  game->add_flag("--value", a.show_value, "Print the game value");
  game->add_flag("--dot", a.show_dot, "Print the annotated tree as DOT");
  game->add_flag("--strategy", a.show_strategy, "Print the optimal play");
  game->add_option("--out", a.out_path, "Write DOT here instead of stdout");

  CLI::App* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_option("--seed", a.seed, "Generator seed")->capture_default_str();
  check->add_option("--count", a.count, "Number of random formulas")
      ->capture_default_str();
  check->add_option("--max-connectives", a.max_connectives,
                    "Connective budget per formula")
      ->capture_default_str();
  check->add_option("--max-vars", a.max_vars, "Variable pool size")
      ->capture_default_str();

  CLI::App* entail =
      app.add_subcommand("entail", "Preferred-model entailment");
  entail->add_option("premise", a.premise, "Premise formula")->required();
  entail->add_option("conclusion", a.conclusion, "Classical conclusion")
      ->required();
  add_cap(entail);

  CLI::App* play = app.add_subcommand("play", "Play against the engine");
  play->add_option("formula", a.formula, "Formula text")->required();
  play->add_option("--variant", a.variant, "g or ng")
      ->check(CLI::IsMember({"g", "ng"}))
      ->capture_default_str();
  play->add_option("--interp", a.interp, "Comma-separated variables");
  play->add_option("--side", a.side, "Which player you control")
      ->check(CLI::IsMember({"me", "you"}))
      ->capture_default_str();
  play->add_flag("--auto", a.auto_play, "Let the engine play both sides");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (eval->parsed()) return run_eval(a);
  if (table->parsed()) return run_table(a);
  if (preferred->parsed()) return run_preferred(a);
  if (game->parsed()) return run_game(a);
  if (check->parsed()) return run_check(a);
  if (entail->parsed()) return run_entail(a);
  if (play->parsed()) return run_play(a);
  return kExitUsage;
}
