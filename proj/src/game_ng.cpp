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

#include "choice/game_ng.hpp"

namespace choice::game_ng {

using game::Role;
using game::Tree;
using game::Turn;

namespace {

std::string state_caption(Role role, const Formula& f) {
  return (role == Role::Proponent ? "P:" : "O:") + print(f);
}

Turn turn_at(Role role, Op op) {
  bool yours = (op == Op::And);
  if (role == Role::Opponent) yours = !yours;
  return yours ? Turn::You : Turn::Me;
}

// Appends the subtree for (role, f) in preorder and collects its leaves.
// Each negation toggles the role of the subtree; the orientation of the
// cross pairs at an ordered disjunction follows the role at that node, so
// preferences are kept across negations and inverted in opponent role.
int build(Tree& t, Role role, const Formula& f, std::vector<int>& out_leaves) {
  if (f.op == Op::Var) {
    int id = t.add_leaf(role, f.name);
    out_leaves.push_back(id);
    return id;
  }

  int id = t.add_internal(turn_at(role, f.op), role, state_caption(role, f));

  if (f.op == Op::Not) {
    int child = build(t, flip(role), *f.lhs, out_leaves);
    t.add_child(id, child);
    return id;
  }

  std::vector<int> left, right;
  int lc = build(t, role, *f.lhs, left);
  int rc = build(t, role, *f.rhs, right);
  t.add_child(id, lc);
  t.add_child(id, rc);

  if (f.op == Op::Ord) {
    if (role == Role::Proponent) {
      for (int w : right) {
        for (int b : left) t.add_pref(w, b);
      }
    } else {
      for (int w : left) {
        for (int b : right) t.add_pref(w, b);
      }
    }
  }
  out_leaves.insert(out_leaves.end(), left.begin(), left.end());
  out_leaves.insert(out_leaves.end(), right.begin(), right.end());
  return id;
}

}  // namespace

Tree build_tree(Role role, const Formula& f) {
  Tree t;
  std::vector<int> leaves;
  build(t, role, f, leaves);
  t.close();
  return t;
}

game::Payoff<gcl::Degree> payoff(const Tree& t, const Interpretation& i) {
  game::Payoff<gcl::Degree> p;
  p.leq = [](const gcl::Degree& a, const gcl::Degree& b) {
    return gcl::leq(a, b);
  };
  p.winning = [](const gcl::Degree& d) { return gcl::winning(d); };
  for (int leaf : t.leaves()) {
    const game::AtomicState& a = t.atom(leaf);
    bool true_state = (a.role == Role::Proponent) == i.contains(a.var);
    p.values.emplace(leaf,
                     true_state
                         ? gcl::Degree(t.longest_chain(leaf))
                         : gcl::Degree(-t.longest_chain_inverted(leaf)));
  }
  return p;
}

gcl::Degree value(const Formula& f, const Interpretation& i) {
  Tree t = build_tree(Role::Proponent, f);
  return game::solve(t, payoff(t, i)).value;
}

}  // namespace choice::game_ng
