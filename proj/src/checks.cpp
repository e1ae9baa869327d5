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

#include "choice/checks.hpp"

#include <algorithm>
#include <sstream>

#include "choice/game_ng.hpp"
#include "choice/game_qcl.hpp"
#include "choice/qcl.hpp"

namespace choice::checks {

FormulaGen::FormulaGen(unsigned long long seed, int max_vars) : rng_(seed) {
  if (max_vars < 1 || max_vars > 26) {
    throw std::invalid_argument("max_vars must be in 1..26");
  }
  for (int i = 0; i < max_vars; ++i) {
    pool_.push_back(std::string(1, static_cast<char>('a' + i)));
  }
}

unsigned long long FormulaGen::next(unsigned long long n) {
  // mt19937_64 output is portable; a plain modulus keeps the stream
  // reproducible across standard libraries.
  return rng_() % n;
}

FormulaPtr FormulaGen::by_connectives(int budget) {
  if (budget <= 0) return var(pool_[next(pool_.size())]);
  switch (next(5)) {
    case 0:
      return var(pool_[next(pool_.size())]);
    case 1:
      return neg(by_connectives(budget - 1));
    case 2:
    case 3:
    case 4: {
      int rem = budget - 1;
      int left = static_cast<int>(next(rem + 1));
      FormulaPtr l = by_connectives(left);
      FormulaPtr r = by_connectives(rem - left);
      switch (next(3)) {
        case 0:
          return conj(std::move(l), std::move(r));
        case 1:
          return disj(std::move(l), std::move(r));
        default:
          return ord(std::move(l), std::move(r));
      }
    }
  }
  return var(pool_[0]);
}

FormulaPtr FormulaGen::by_depth(int max_depth) {
  if (max_depth <= 0) return var(pool_[next(pool_.size())]);
  switch (next(5)) {
    case 0:
      return var(pool_[next(pool_.size())]);
    case 1:
      return neg(by_depth(max_depth - 1));
    case 2:
      return conj(by_depth(max_depth - 1), by_depth(max_depth - 1));
    case 3:
      return disj(by_depth(max_depth - 1), by_depth(max_depth - 1));
    default:
      return ord(by_depth(max_depth - 1), by_depth(max_depth - 1));
  }
}

bool Report::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

const PropertyResult* Report::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::string Report::to_string() const {
  std::ostringstream os;
  os << "seed " << seed << "\n";
  int failed = 0;
  for (const auto& p : properties) {
    if (p.passed) {
      os << "pass " << p.name << "\n";
    } else {
      ++failed;
      os << "fail " << p.name << ": " << p.counterexample << "\n";
    }
  }
  if (failed == 0) {
    os << "all properties passed (" << formulas << " formulas)\n";
  } else {
    os << failed << " properties failed (" << formulas << " formulas)\n";
  }
  return os.str();
}

namespace {

bool classical_eval(const Formula& f, const Interpretation& i) {
  switch (f.op) {
    case Op::Var:
      return i.contains(f.name);
    case Op::Not:
      return !classical_eval(*f.lhs, i);
    case Op::And:
      return classical_eval(*f.lhs, i) && classical_eval(*f.rhs, i);
    case Op::Or:
      return classical_eval(*f.lhs, i) || classical_eval(*f.rhs, i);
    case Op::Ord:
      throw std::logic_error("classical_eval on ordered disjunction");
  }
  return false;
}

FormulaPtr strip_ord(const Formula& f) {
  switch (f.op) {
    case Op::Var:
      return var(f.name);
    case Op::Not:
      return neg(strip_ord(*f.lhs));
    case Op::And:
      return conj(strip_ord(*f.lhs), strip_ord(*f.rhs));
    case Op::Or:
    case Op::Ord:
      return disj(strip_ord(*f.lhs), strip_ord(*f.rhs));
  }
  return nullptr;
}

bool negation_on_atoms_only(const Formula& f) {
  switch (f.op) {
    case Op::Var:
      return true;
    case Op::Not:
      return f.lhs->op == Op::Var;
    default:
      return negation_on_atoms_only(*f.lhs) && negation_on_atoms_only(*f.rhs);
  }
}

int longest_chain_over_leaves(const game::Tree& t) {
  int best = 1;
  for (int leaf : t.leaves()) best = std::max(best, t.longest_chain(leaf));
  return best;
}

void collect_leaves(const game::Tree& t, int id, std::set<int>& out) {
  if (t.is_leaf(id)) {
    out.insert(id);
    return;
  }
  for (int c : t.children(id)) collect_leaves(t, c, out);
}

// No << pair may relate two leaves of the same opponent-role subtree.
bool opponent_subtrees_preference_free(const game::Tree& t) {
  for (int id = 0; id < t.size(); ++id) {
    if (t.role(id) != game::Role::Opponent) continue;
    std::set<int> leaves;
    collect_leaves(t, id, leaves);
    for (auto [w, b] : t.prefs()) {
      if (leaves.count(w) && leaves.count(b)) return false;
    }
  }
  return true;
}

// Property ids, in report order.
enum PropId {
  kRoundtrip,
  kQclBound,
  kQclAssoc,
  kQclDoubleNeg,
  kQclClassical,
  kPqclAtoms,
  kPqclDoubleNeg,
  kGclOrder,
  kGclBound,
  kGclAssoc,
  kGclNegation,
  kGclDoubleNeg,
  kGameChain,
  kGameOpponentPrefs,
  kGameOpponentValue,
  kGameAdequacyQcl,
  kNgChain,
  kNgAdequacy,
  kNgRoleSymmetry,
  kNgDoubleNeg,
  kOracleAgreement,
  kNumProps,
};

const char* kPropNames[kNumProps] = {
    "parse-roundtrip",
    "qcl-degree-bound",
    "qcl-ord-assoc",
    "qcl-double-negation",
    "qcl-classical-agreement",
    "pqcl-negation-to-atoms",
    "pqcl-double-negation",
    "gcl-order-total",
    "gcl-degree-bound",
    "gcl-ord-assoc",
    "gcl-negation",
    "gcl-double-negation",
    "game-chain-optionality",
    "game-opponent-preference-free",
    "game-opponent-value",
    "game-adequacy-qcl",
    "ng-chain-optionality",
    "ng-adequacy",
    "ng-role-symmetry",
    "ng-double-negation",
    "oracle-agreement",
};

class Suite {
 public:
  Suite() {
    results_.resize(kNumProps);
    for (int i = 0; i < kNumProps; ++i) results_[i].name = kPropNames[i];
  }

  bool active(PropId id) const { return results_[id].passed; }

  void check(PropId id, bool ok, const std::function<std::string()>& ce) {
    PropertyResult& p = results_[id];
    if (!p.passed) return;
    ++p.cases;
    if (!ok) {
      p.passed = false;
      p.counterexample = ce();
    }
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::vector<PropertyResult> results_;
};

std::string where(const Formula& f, const Interpretation& i) {
  return "formula '" + print(f) + "' interp " + i.to_string();
}

}  // namespace

Report run(const Options& opt) {
  Suite suite;

  FormulaGen gen(opt.seed, opt.max_vars);
  std::vector<FormulaPtr> corpus;
  corpus.reserve(opt.count);
  for (int k = 0; k < opt.count; ++k) {
    corpus.push_back(gen.by_connectives(opt.max_connectives));
  }

  auto ng_payoff = [&](const game::Tree& t, const Interpretation& i) {
    auto p = game_ng::payoff(t, i);
    if (opt.gcl_leq_override) p.leq = opt.gcl_leq_override;
    return p;
  };

  // Total-order laws for the signed comparator, against the rational
  // characterisation a <= b iff 1/a <= 1/b.
  {
    std::vector<long long> sample;
    for (long long v = -6; v <= 6; ++v) {
      if (v != 0) sample.push_back(v);
    }
    for (long long a : sample) {
      for (long long b : sample) {
        bool ab = gcl::leq(gcl::Degree(a), gcl::Degree(b));
        bool ba = gcl::leq(gcl::Degree(b), gcl::Degree(a));
        bool rational = (1.0L / a) <= (1.0L / b);
        suite.check(kGclOrder, ab == rational && (ab || ba) &&
                                   !(ab && ba && a != b),
                    [&] {
                      return "pair (" + std::to_string(a) + ", " +
                             std::to_string(b) + ")";
                    });
        for (long long c : sample) {
          bool bc = gcl::leq(gcl::Degree(b), gcl::Degree(c));
          bool ac = gcl::leq(gcl::Degree(a), gcl::Degree(c));
          suite.check(kGclOrder, !(ab && bc) || ac, [&] {
            return "triple (" + std::to_string(a) + ", " + std::to_string(b) +
                   ", " + std::to_string(c) + ")";
          });
        }
      }
    }
  }

  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Formula& f = *corpus[k];
    auto interps = all_interpretations(f, opt.var_cap);
    long long opt_q = qcl::optionality(f);
    long long opt_g = gcl::optionality(f);

    suite.check(kRoundtrip, equal(*parse(print(f)), f),
                [&] { return "formula '" + print(f) + "'"; });

    FormulaPtr not_f = neg(corpus[k]);
    FormulaPtr nn_f = neg(not_f);
    FormulaPtr pushed = qcl::pqcl_push_negation(f);
    suite.check(kPqclAtoms,
                negation_on_atoms_only(*pushed) &&
                    equal(*qcl::pqcl_push_negation(*pushed), *pushed),
                [&] { return "formula '" + print(f) + "'"; });

    game::Tree tq = game_qcl::build_tree(game::Role::Proponent, f);
    game::Tree tqo = game_qcl::build_tree(game::Role::Opponent, f);
    game::Tree tng = game_ng::build_tree(game::Role::Proponent, f);
    game::Tree tngo = game_ng::build_tree(game::Role::Opponent, f);
    game::Tree tng_nn = game_ng::build_tree(game::Role::Proponent, *nn_f);

    suite.check(kGameChain, longest_chain_over_leaves(tq) == opt_q,
                [&] { return "formula '" + print(f) + "'"; });
    suite.check(kNgChain,
                longest_chain_over_leaves(tng) == opt_g &&
                    longest_chain_over_leaves(tngo) == opt_g,
                [&] { return "formula '" + print(f) + "'"; });

    suite.check(kGameOpponentPrefs,
                tqo.prefs().empty() && opponent_subtrees_preference_free(tq),
                [&] { return "formula '" + print(f) + "'"; });

    // Classical fragment of the same shape.
    FormulaPtr fc = strip_ord(f);

    for (const Interpretation& i : interps) {
      qcl::Degree dq = qcl::degree(f, i);
      gcl::Degree dg = gcl::degree(f, i);

      suite.check(kQclBound, !dq.is_finite() || dq.value() <= opt_q,
                  [&] { return where(f, i); });
      suite.check(kGclBound, std::abs(dg.value()) <= opt_g,
                  [&] { return where(f, i); });

      qcl::Degree dq_nn = qcl::degree(*nn_f, i);
      suite.check(kQclDoubleNeg,
                  dq_nn.is_finite() == dq.is_finite() &&
                      (!dq_nn.is_finite() || dq_nn.value() == 1),
                  [&] { return where(f, i); });
      suite.check(kPqclDoubleNeg, qcl::pqcl_degree(*nn_f, i) ==
                                      qcl::pqcl_degree(f, i),
                  [&] { return where(f, i); });

      gcl::Degree dg_not = gcl::degree(*not_f, i);
      suite.check(kGclNegation,
                  dg_not == -dg && (dg.positive() != dg_not.positive()),
                  [&] { return where(f, i); });
      suite.check(kGclDoubleNeg, gcl::degree(*nn_f, i) == dg,
                  [&] { return where(f, i); });

      suite.check(kQclClassical,
                  qcl::degree(*fc, i).is_finite() == classical_eval(*fc, i),
                  [&] { return where(*fc, i); });

      if (suite.active(kGameAdequacyQcl)) {
        qcl::Degree v = game::solve(tq, game_qcl::payoff(tq, i)).value;
        suite.check(kGameAdequacyQcl, v == dq, [&] {
          return where(f, i) + ": expected " + dq.to_string() + ", got " +
                 v.to_string();
        });
      }
      if (suite.active(kGameOpponentValue)) {
        qcl::Degree v = game::solve(tqo, game_qcl::payoff(tqo, i)).value;
        qcl::Degree want = dq.is_finite() ? qcl::Degree::infinity()
                                          : qcl::Degree::finite(1);
        suite.check(kGameOpponentValue, v == want, [&] {
          return where(f, i) + ": expected " + want.to_string() + ", got " +
                 v.to_string();
        });
      }
      if (suite.active(kNgAdequacy)) {
        gcl::Degree v = game::solve(tng, ng_payoff(tng, i)).value;
        suite.check(kNgAdequacy, v == dg, [&] {
          return where(f, i) + ": expected " + dg.to_string() + ", got " +
                 v.to_string();
        });
      }
      if (suite.active(kNgRoleSymmetry)) {
        gcl::Degree v = game::solve(tngo, ng_payoff(tngo, i)).value;
        suite.check(kNgRoleSymmetry, v == -dg, [&] {
          return where(f, i) + ": expected " + (-dg).to_string() + ", got " +
                 v.to_string();
        });
      }
      if (suite.active(kNgDoubleNeg)) {
        gcl::Degree v = game::solve(tng, ng_payoff(tng, i)).value;
        gcl::Degree vnn = game::solve(tng_nn, ng_payoff(tng_nn, i)).value;
        suite.check(kNgDoubleNeg, vnn == v, [&] {
          return where(f, i) + ": expected " + v.to_string() + ", got " +
                 vnn.to_string();
        });
      }
      if (suite.active(kOracleAgreement)) {
        auto pq = game_qcl::payoff(tq, i);
        qcl::Degree oq = game::maxmin_oracle(tq, pq, opt.strategy_cap);
        qcl::Degree sq = game::solve(tq, pq).value;
        auto png = ng_payoff(tng, i);
        gcl::Degree ong = game::maxmin_oracle(tng, png, opt.strategy_cap);
        gcl::Degree sng = game::solve(tng, png).value;
        suite.check(kOracleAgreement, oq == sq && ong == sng,
                    [&] { return where(f, i); });
      }
    }

    // Associativity of ordered disjunction on corpus triples.
    if (corpus.size() >= 3 && suite.active(kQclAssoc)) {
      const FormulaPtr& a = corpus[k];
      const FormulaPtr& b = corpus[(k + 1) % corpus.size()];
      const FormulaPtr& c = corpus[(k + 2) % corpus.size()];
      FormulaPtr left = ord(ord(a, b), c);
      FormulaPtr right = ord(a, ord(b, c));
      bool ok_q = qcl::optionality(*left) == qcl::optionality(*right);
      bool ok_g = gcl::optionality(*left) == gcl::optionality(*right);
      for (const Interpretation& i : all_interpretations(*left, opt.var_cap)) {
        ok_q = ok_q && qcl::degree(*left, i) == qcl::degree(*right, i);
        ok_g = ok_g && gcl::degree(*left, i) == gcl::degree(*right, i);
        if (!ok_q || !ok_g) {
          auto ce = [&] { return where(*left, i); };
          suite.check(kQclAssoc, ok_q, ce);
          suite.check(kGclAssoc, ok_g, ce);
          break;
        }
      }
      auto ce = [&] { return "formula '" + print(*left) + "'"; };
      suite.check(kQclAssoc, ok_q, ce);
      suite.check(kGclAssoc, ok_g, ce);
    }
  }

  // Extra round-trip load: deeper formulas than the game corpus.
  for (int k = 0; k < opt.count; ++k) {
    FormulaPtr f = gen.by_depth(opt.deep_depth);
    suite.check(kRoundtrip, equal(*parse(print(*f)), *f),
                [&] { return "formula '" + print(*f) + "'"; });
  }

  Report report;
  report.seed = opt.seed;
  report.formulas = opt.count;
  report.properties = suite.take();
  return report;
}

}  // namespace choice::checks
