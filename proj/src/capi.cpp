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

#include "choice.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "choice/checks.hpp"
#include "choice/formula.hpp"
#include "choice/game.hpp"
#include "choice/game_ng.hpp"
#include "choice/game_qcl.hpp"
#include "choice/gcl.hpp"
#include "choice/qcl.hpp"

struct choice_formula {
  choice::FormulaPtr f;
};

struct choice_game {
  choice::game::Tree tree;
  choice_variant variant;
};

namespace {

thread_local std::string t_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
choice_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const choice::ParseError& e) {
    t_last_error = e.what();
    return CHOICE_ERR_PARSE;
  } catch (const choice::CapExceeded& e) {
    t_last_error = e.what();
    return CHOICE_ERR_CAP;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return CHOICE_ERR_INVALID;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return CHOICE_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return CHOICE_ERR_INTERNAL;
  }
}

choice_status require(bool ok, const char* msg) {
  if (ok) return CHOICE_OK;
  t_last_error = msg;
  return CHOICE_ERR_INVALID;
}

choice::Interpretation parse_interp(const char* csv) {
  return choice::Interpretation::from_csv(csv ? csv : "");
}

// Applies fn to (payoff, solution) of the game over the interpretation,
// bridging the two payoff domains.
template <typename Fn>
void with_solution(const choice_game& g, const choice::Interpretation& i,
                   Fn&& fn) {
  if (g.variant == CHOICE_GAME_G) {
    auto p = choice::game_qcl::payoff(g.tree, i);
    auto s = choice::game::solve(g.tree, p);
    fn(p, s, [](const choice::qcl::Degree& d) { return d.to_string(); });
  } else {
    auto p = choice::game_ng::payoff(g.tree, i);
    auto s = choice::game::solve(g.tree, p);
    fn(p, s, [](const choice::gcl::Degree& d) { return d.to_string(); });
  }
}

}  // namespace

extern "C" {

int choice_api_version(void) { return CHOICE_API_VERSION; }

const char* choice_last_error(void) { return t_last_error.c_str(); }

void choice_string_free(char* s) { std::free(s); }

choice_status choice_formula_parse(const char* text, choice_formula** out) {
  if (choice_status s = require(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new choice_formula{choice::parse(text)};
    return CHOICE_OK;
  });
}

void choice_formula_free(choice_formula* f) { delete f; }

choice_status choice_formula_print(const choice_formula* f, char** out) {
  if (choice_status s = require(f && out, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(choice::print(*f->f));
    return CHOICE_OK;
  });
}

choice_status choice_formula_vars(const choice_formula* f, char** out_csv) {
  if (choice_status s = require(f && out_csv, "null argument")) return s;
  return guarded([&] {
    std::string csv;
    for (const auto& v : choice::vars(*f->f)) {
      if (!csv.empty()) csv.push_back(',');
      csv += v;
    }
    *out_csv = dup_string(csv);
    return CHOICE_OK;
  });
}

choice_status choice_eval(const choice_formula* f, choice_semantics sem,
                          const char* interp_csv, char** out_degree) {
  if (choice_status s = require(f && out_degree, "null argument")) return s;
  return guarded([&] {
    choice::Interpretation i = parse_interp(interp_csv);
    std::string text;
    switch (sem) {
      case CHOICE_SEM_QCL:
        text = choice::qcl::degree(*f->f, i).to_string();
        break;
      case CHOICE_SEM_PQCL:
        text = choice::qcl::pqcl_degree(*f->f, i).to_string();
        break;
      case CHOICE_SEM_GCL:
        text = choice::gcl::degree(*f->f, i).to_string();
        break;
      default:
        t_last_error = "unknown semantics";
        return CHOICE_ERR_INVALID;
    }
    *out_degree = dup_string(text);
    return CHOICE_OK;
  });
}

choice_status choice_interp_count(const choice_formula* f, int var_cap,
                                  unsigned long long* out) {
  if (choice_status s = require(f && out, "null argument")) return s;
  return guarded([&] {
    *out = choice::subset_count(choice::vars(*f->f).size(), var_cap);
    return CHOICE_OK;
  });
}

choice_status choice_interp_at(const choice_formula* f,
                               unsigned long long index, char** out_csv) {
  if (choice_status s = require(f && out_csv, "null argument")) return s;
  return guarded([&] {
    auto universe = choice::vars(*f->f);
    if (universe.size() >= 63 || index >= (1ULL << universe.size())) {
      t_last_error = "interpretation index out of range";
      return CHOICE_ERR_INVALID;
    }
    std::vector<std::string> sorted(universe.begin(), universe.end());
    *out_csv = dup_string(choice::subset_at(sorted, index).to_csv());
    return CHOICE_OK;
  });
}

choice_status choice_preferred(const choice_formula* f, choice_semantics sem,
                               int var_cap, char** out_text) {
  if (choice_status s = require(f && out_text, "null argument")) return s;
  return guarded([&] {
    std::ostringstream os;
    if (sem == CHOICE_SEM_QCL) {
      auto pm = choice::qcl::preferred_models(*f->f, var_cap);
      if (pm.models.empty()) {
        os << "unsatisfiable\n";
      } else {
        os << "degree " << pm.degree.to_string() << "\n";
        for (const auto& m : pm.models) os << m.to_string() << "\n";
      }
    } else if (sem == CHOICE_SEM_GCL) {
      auto pm = choice::gcl::preferred_models(*f->f, var_cap);
      if (!pm.degree) {
        os << "unsatisfiable\n";
      } else {
        os << "degree " << pm.degree->to_string() << "\n";
        for (const auto& m : pm.models) os << m.to_string() << "\n";
      }
    } else {
      t_last_error = "preferred models are defined for qcl and gcl";
      return CHOICE_ERR_INVALID;
    }
    *out_text = dup_string(os.str());
    return CHOICE_OK;
  });
}

choice_status choice_entails(const choice_formula* premise,
                             const choice_formula* conclusion, int var_cap,
                             int* out) {
  if (choice_status s = require(premise && conclusion && out, "null argument"))
    return s;
  return guarded([&] {
    *out = choice::qcl::entails(*premise->f, *conclusion->f, var_cap) ? 1 : 0;
    return CHOICE_OK;
  });
}

choice_status choice_game_build(const choice_formula* f, choice_variant v,
                                choice_game** out) {
  if (choice_status s = require(f && out, "null argument")) return s;
  if (choice_status s = require(v == CHOICE_GAME_G || v == CHOICE_GAME_NG,
                                "unknown game variant"))
    return s;
  return guarded([&] {
    auto role = choice::game::Role::Proponent;
    *out = new choice_game{v == CHOICE_GAME_G
                               ? choice::game_qcl::build_tree(role, *f->f)
                               : choice::game_ng::build_tree(role, *f->f),
                           v};
    return CHOICE_OK;
  });
}

void choice_game_free(choice_game* g) { delete g; }

choice_status choice_game_value(const choice_game* g, const char* interp_csv,
                                char** out_degree) {
  if (choice_status s = require(g && out_degree, "null argument")) return s;
  return guarded([&] {
    choice::Interpretation i = parse_interp(interp_csv);
    with_solution(*g, i, [&](const auto&, const auto& sol, auto fmt) {
      *out_degree = dup_string(fmt(sol.value));
    });
    return CHOICE_OK;
  });
}

choice_status choice_game_dot(const choice_game* g, const char* interp_csv,
                              char** out) {
  if (choice_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    if (!interp_csv) {
      *out = dup_string(choice::game::to_dot(g->tree));
      return CHOICE_OK;
    }
    choice::Interpretation i = parse_interp(interp_csv);
    with_solution(*g, i, [&](const auto& p, const auto&, auto fmt) {
      *out = dup_string(choice::game::to_dot(
          g->tree, [&](int leaf) { return fmt(p.at(leaf)); }));
    });
    return CHOICE_OK;
  });
}

choice_status choice_game_strategy(const choice_game* g,
                                   const char* interp_csv, char** out) {
  if (choice_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    choice::Interpretation i = parse_interp(interp_csv);
    const choice::game::Tree& t = g->tree;
    with_solution(*g, i, [&](const auto& p, const auto& sol, auto fmt) {
      std::ostringstream os;
      os << "value " << fmt(sol.value) << "\n";
      int at = t.root();
      while (!t.is_leaf(at)) {
        bool my_turn = t.label(at) == choice::game::Turn::Me;
        const auto& chosen = my_turn ? sol.mine.chosen : sol.yours.chosen;
        int next = -1;
        for (int c : t.children(at)) {
          if (chosen.count(c)) {
            next = c;
            break;
          }
        }
        os << (my_turn ? "I " : "Y ") << t.caption(at) << " -> "
           << t.caption(next) << "\n";
        at = next;
      }
      os << "outcome " << t.caption(at) << " payoff " << fmt(p.at(at)) << " ("
         << (p.winning(p.at(at)) ? "winning" : "losing") << ")\n";
      *out = dup_string(os.str());
    });
    return CHOICE_OK;
  });
}

choice_status choice_game_node_count(const choice_game* g, int* out) {
  if (choice_status s = require(g && out, "null argument")) return s;
  *out = g->tree.size();
  return CHOICE_OK;
}

choice_status choice_game_node_info(const choice_game* g, int node,
                                    char* out_kind, char** out_caption,
                                    int* out_child_count) {
  if (choice_status s =
          require(g && out_kind && out_caption && out_child_count,
                  "null argument"))
    return s;
  return guarded([&] {
    const choice::game::Tree& t = g->tree;
    if (t.is_leaf(node)) {
      *out_kind = 'L';
      *out_child_count = 0;
    } else {
      *out_kind = t.label(node) == choice::game::Turn::Me ? 'I' : 'Y';
      *out_child_count = static_cast<int>(t.children(node).size());
    }
    *out_caption = dup_string(t.caption(node));
    return CHOICE_OK;
  });
}

choice_status choice_game_node_child(const choice_game* g, int node, int k,
                                     int* out_child) {
  if (choice_status s = require(g && out_child, "null argument")) return s;
  return guarded([&] {
    const auto& kids = g->tree.children(node);
    if (k < 0 || k >= static_cast<int>(kids.size())) {
      t_last_error = "child index out of range";
      return CHOICE_ERR_INVALID;
    }
    *out_child = kids[k];
    return CHOICE_OK;
  });
}

choice_status choice_game_leaf_payoff(const choice_game* g, int leaf,
                                      const char* interp_csv,
                                      char** out_degree, int* out_winning) {
  if (choice_status s =
          require(g && out_degree && out_winning, "null argument"))
    return s;
  return guarded([&] {
    if (!g->tree.is_leaf(leaf)) {
      t_last_error = "not a leaf";
      return CHOICE_ERR_INVALID;
    }
    choice::Interpretation i = parse_interp(interp_csv);
    with_solution(*g, i, [&](const auto& p, const auto&, auto fmt) {
      *out_degree = dup_string(fmt(p.at(leaf)));
      *out_winning = p.winning(p.at(leaf)) ? 1 : 0;
    });
    return CHOICE_OK;
  });
}

choice_status choice_game_optimal_child(const choice_game* g,
                                        const char* interp_csv, int node,
                                        int* out_index) {
  if (choice_status s = require(g && out_index, "null argument")) return s;
  return guarded([&] {
    const choice::game::Tree& t = g->tree;
    if (t.is_leaf(node)) {
      t_last_error = "leaves have no moves";
      return CHOICE_ERR_INVALID;
    }
    choice::Interpretation i = parse_interp(interp_csv);
    with_solution(*g, i, [&](const auto&, const auto& sol, auto) {
      const auto& chosen = t.label(node) == choice::game::Turn::Me
                               ? sol.mine.chosen
                               : sol.yours.chosen;
      const auto& kids = t.children(node);
      for (int k = 0; k < static_cast<int>(kids.size()); ++k) {
        if (chosen.count(kids[k])) {
          *out_index = k;
          return;
        }
      }
      *out_index = 0;
    });
    return CHOICE_OK;
  });
}

choice_status choice_check_run(unsigned long long seed, int count,
                               int max_connectives, int max_vars,
                               char** out_report, int* out_all_passed) {
  if (choice_status s =
          require(out_report && out_all_passed, "null argument"))
    return s;
  if (choice_status s = require(count >= 0 && max_connectives >= 0,
                                "count and max_connectives must be >= 0"))
    return s;
  return guarded([&] {
    choice::checks::Options opt;
    opt.seed = seed;
    opt.count = count;
    opt.max_connectives = max_connectives;
    opt.max_vars = max_vars;
    choice::checks::Report report = choice::checks::run(opt);
    *out_report = dup_string(report.to_string());
    *out_all_passed = report.all_passed() ? 1 : 0;
    return CHOICE_OK;
  });
}

}  // extern "C"
