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

#include "choice/game.hpp"

#include <random>

#include "choice/formula.hpp"
#include "choice/game_ng.hpp"
#include "choice/game_qcl.hpp"
#include "choice/gcl.hpp"
#include "choice/qcl.hpp"
#include "doctest.h"

using namespace choice;
using game::Role;
using game::Strategy;
using game::Tree;
using game::Turn;

namespace {

game::Payoff<int> int_payoff() {
  game::Payoff<int> p;
  p.leq = [](const int& a, const int& b) { return a <= b; };
  p.winning = [](const int& v) { return v > 0; };
  return p;
}

// Tree with a single leaf P:a.
Tree leaf_tree() {
  Tree t;
  t.add_leaf(Role::Proponent, "a");
  t.close();
  return t;
}

// I-labelled root over n leaves.
Tree fan_tree(Turn label, int n) {
  Tree t;
  int root = t.add_internal(label, Role::Proponent, "root");
  for (int k = 0; k < n; ++k) {
    int leaf = t.add_leaf(Role::Proponent, std::string(1, 'a' + k));
    t.add_child(root, leaf);
  }
  t.close();
  return t;
}

// Random tree for the counting and oracle properties; parent-first ids.
int grow(Tree& t, std::mt19937& rng, int depth, char& next_var) {
  bool make_leaf = depth <= 0 || rng() % 3 == 0;
  if (make_leaf) {
    return t.add_leaf(rng() % 2 ? Role::Proponent : Role::Opponent,
                      std::string(1, next_var++));
  }
  Turn label = rng() % 2 ? Turn::Me : Turn::You;
  int id = t.add_internal(label, Role::Proponent, "n");
  int kids = 2 + static_cast<int>(rng() % 2);
  for (int k = 0; k < kids; ++k) {
    int c = grow(t, rng, depth - 1, next_var);
    t.add_child(id, c);
  }
  return id;
}

Tree random_tree(std::mt19937& rng) {
  Tree t;
  char next_var = 'a';
  if (rng() % 8 == 0) {
    t.add_leaf(Role::Proponent, "a");
  } else {
    grow(t, rng, 3, next_var);
  }
  t.close();
  return t;
}

}  // namespace

TEST_CASE("single-leaf games have one strategy each and a fixed outcome") {
  Tree t = leaf_tree();
  auto mine = game::enumerate_strategies(t, Turn::Me);
  auto yours = game::enumerate_strategies(t, Turn::You);
  REQUIRE(mine.size() == 1);
  REQUIRE(yours.size() == 1);
  CHECK(game::outcome(t, mine[0], yours[0]) == 0);

  auto p = int_payoff();
  p.values.emplace(0, 7);
  CHECK(game::solve(t, p).value == 7);
}

TEST_CASE("a choice node is decided by its owner") {
  Tree t = fan_tree(Turn::Me, 2);
  auto mine = game::enumerate_strategies(t, Turn::Me);
  auto yours = game::enumerate_strategies(t, Turn::You);
  REQUIRE(mine.size() == 2);
  REQUIRE(yours.size() == 1);

  Strategy pick_second{Turn::Me, {0, 2}};
  CHECK(game::outcome(t, pick_second, yours[0]) == 2);
  Strategy pick_first{Turn::Me, {0, 1}};
  CHECK(game::outcome(t, pick_first, yours[0]) == 1);
}

TEST_CASE("outcome is the intersection of the two game plans") {
  // I-root over two Y-nodes, each with two leaves.
  Tree t;
  int root = t.add_internal(Turn::Me, Role::Proponent, "root");
  int y1 = t.add_internal(Turn::You, Role::Proponent, "y1");
  int l1 = t.add_leaf(Role::Proponent, "a");
  int l2 = t.add_leaf(Role::Proponent, "b");
  int y2 = t.add_internal(Turn::You, Role::Proponent, "y2");
  int l3 = t.add_leaf(Role::Proponent, "c");
  int l4 = t.add_leaf(Role::Proponent, "d");
  t.add_child(root, y1);
  t.add_child(y1, l1);
  t.add_child(y1, l2);
  t.add_child(root, y2);
  t.add_child(y2, l3);
  t.add_child(y2, l4);
  t.close();

  auto mine = game::enumerate_strategies(t, Turn::Me);
  auto yours = game::enumerate_strategies(t, Turn::You);
  REQUIRE(mine.size() == 2);
  REQUIRE(yours.size() == 4);
  // Every pair meets in exactly one leaf, and each leaf is reachable.
  std::set<int> seen;
  for (const auto& sm : mine) {
    for (const auto& sy : yours) {
      int leaf = game::outcome(t, sm, sy);
      CHECK(t.is_leaf(leaf));
      seen.insert(leaf);
    }
  }
  CHECK(seen == std::set<int>{l1, l2, l3, l4});
}

TEST_CASE("outcome rejects invalid strategies") {
  Tree t = fan_tree(Turn::Me, 2);
  Strategy both{Turn::Me, {0, 1, 2}};  // two children picked at an I node
  Strategy none{Turn::Me, {0}};
  Strategy fine{Turn::You, {0, 1, 2}};
  CHECK_FALSE(game::is_valid(t, both));
  CHECK_FALSE(game::is_valid(t, none));
  CHECK(game::is_valid(t, fine));
  CHECK_THROWS_AS(game::outcome(t, both, fine), std::invalid_argument);
  CHECK_THROWS_AS(game::outcome(t, fine, fine), std::invalid_argument);
}

TEST_CASE("solve maximises at my nodes and minimises at yours") {
  Tree t = fan_tree(Turn::Me, 2);
  game::Payoff<qcl::Degree> p;
  p.leq = [](const qcl::Degree& a, const qcl::Degree& b) {
    return qcl::leq(a, b);
  };
  p.winning = [](const qcl::Degree& d) { return qcl::winning(d); };
  p.values.emplace(1, qcl::Degree::infinity());
  p.values.emplace(2, qcl::Degree::finite(2));
  auto sol = game::solve(t, p);
  CHECK(sol.value == qcl::Degree::finite(2));
  CHECK(sol.mine.chosen.count(2) == 1);

  Tree ty = fan_tree(Turn::You, 2);
  game::Payoff<int> q = int_payoff();
  q.values.emplace(1, 5);
  q.values.emplace(2, 9);
  CHECK(game::solve(ty, q).value == 5);
}

TEST_CASE("solve breaks ties towards the leftmost child") {
  Tree t = fan_tree(Turn::Me, 3);
  auto p = int_payoff();
  p.values.emplace(1, 4);
  p.values.emplace(2, 4);
  p.values.emplace(3, 1);
  auto sol = game::solve(t, p);
  CHECK(sol.value == 4);
  CHECK(sol.mine.chosen.count(1) == 1);
  CHECK(sol.mine.chosen.count(2) == 0);
}

TEST_CASE("strategy counts multiply over the owner's decision nodes") {
  std::mt19937 rng(99);
  for (int k = 0; k < 60; ++k) {
    Tree t = random_tree(rng);
    for (Turn owner : {Turn::Me, Turn::You}) {
      long long product = 1;
      for (int id = 0; id < t.size(); ++id) {
        if (!t.is_leaf(id) && t.label(id) == owner) {
          product *= static_cast<long long>(t.children(id).size());
        }
      }
      if (product > game::kDefaultStrategyCap) {
        CHECK_THROWS_AS(game::enumerate_strategies(t, owner), CapExceeded);
        continue;
      }
      auto all = game::enumerate_strategies(t, owner);
      CHECK(static_cast<long long>(all.size()) == product);
      for (const auto& s : all) CHECK(game::is_valid(t, s));
      std::set<std::set<int>> distinct;
      for (const auto& s : all) distinct.insert(s.chosen);
      CHECK(distinct.size() == all.size());
    }
  }
}

TEST_CASE("strategy enumeration is capped") {
  // 13 binary choice nodes for Me: 2^13 strategies > 4096.
  Tree t;
  int at = t.add_internal(Turn::Me, Role::Proponent, "n0");
  for (int k = 1; k < 13; ++k) {
    int leaf = t.add_leaf(Role::Proponent, "x");
    int next = t.add_internal(Turn::Me, Role::Proponent, "n");
    t.add_child(at, leaf);
    t.add_child(at, next);
    at = next;
  }
  int l1 = t.add_leaf(Role::Proponent, "x");
  int l2 = t.add_leaf(Role::Proponent, "x");
  t.add_child(at, l1);
  t.add_child(at, l2);
  t.close();
  CHECK_THROWS_AS(game::enumerate_strategies(t, Turn::Me), CapExceeded);
  CHECK(game::enumerate_strategies(t, Turn::Me, 1 << 13).size() == 1 << 13);
}

TEST_CASE("longest chains over the preference order") {
  // Three leaves with c << b << a.
  Tree u;
  int root = u.add_internal(Turn::Me, Role::Proponent, "root");
  int a = u.add_leaf(Role::Proponent, "a");
  int b = u.add_leaf(Role::Proponent, "b");
  int c = u.add_leaf(Role::Proponent, "c");
  u.add_child(root, a);
  u.add_child(root, b);
  u.add_child(root, c);
  u.add_pref(c, b);
  u.add_pref(b, a);
  u.close();

  CHECK(u.longest_chain(c) == 3);
  CHECK(u.longest_chain(b) == 2);
  CHECK(u.longest_chain(a) == 1);
  CHECK(u.longest_chain_inverted(a) == 3);
  CHECK(u.longest_chain_inverted(c) == 1);
  CHECK(u.prefers(c, a));  // closure
  CHECK_FALSE(u.prefers(a, c));
  CHECK(u.prefs().size() == 3);

  // Monotone: a << b forces a strictly longer chain from below.
  for (auto [w, bt] : u.prefs()) {
    CHECK(u.longest_chain(w) >= u.longest_chain(bt) + 1);
  }
}

TEST_CASE("cyclic preferences are rejected") {
  Tree t;
  int root = t.add_internal(Turn::Me, Role::Proponent, "root");
  int a = t.add_leaf(Role::Proponent, "a");
  int b = t.add_leaf(Role::Proponent, "b");
  t.add_child(root, a);
  t.add_child(root, b);
  t.add_pref(a, b);
  t.add_pref(b, a);
  CHECK_THROWS_AS(t.close(), std::logic_error);
}

TEST_CASE("the enumeration oracle agrees with backward induction") {
  std::mt19937 rng(7);
  for (int k = 0; k < 80; ++k) {
    Tree t = random_tree(rng);
    auto p = int_payoff();
    for (int leaf : t.leaves()) {
      p.values.emplace(leaf, static_cast<int>(rng() % 7) - 3);
    }
    long long strategies = 1;
    for (int id = 0; id < t.size(); ++id) {
      if (!t.is_leaf(id)) strategies *= 2;  // coarse bound only
    }
    if (strategies > game::kDefaultStrategyCap) continue;
    try {
      CHECK(game::maxmin_oracle(t, p) == game::solve(t, p).value);
    } catch (const CapExceeded&) {
    }
  }
}

TEST_CASE("oracle reproduces the worked game values") {
  FormulaPtr f = parse("((a >< b) >< c) & !(a >< d)");

  game::Tree tg = game_qcl::build_tree(Role::Proponent, *f);
  auto pg = game_qcl::payoff(tg, Interpretation::from_csv("a"));
  CHECK(game::maxmin_oracle(tg, pg) == qcl::Degree::infinity());
  CHECK(game::enumerate_strategies(tg, Turn::Me).size() == 4);
  CHECK(game::enumerate_strategies(tg, Turn::You).size() == 4);

  auto pb = game_qcl::payoff(tg, Interpretation::from_csv("b"));
  CHECK(game::maxmin_oracle(tg, pb) == qcl::Degree::finite(2));

  game::Tree tn = game_ng::build_tree(Role::Proponent, *f);
  auto pn = game_ng::payoff(tn, Interpretation::from_csv("d"));
  CHECK(game::maxmin_oracle(tn, pn) == gcl::Degree(-2));
}

TEST_CASE("dot export shows labels, leaves and preference edges") {
  FormulaPtr f = parse("(a >< b) & !c");
  game::Tree t = game_qcl::build_tree(Role::Proponent, *f);
  std::string dot = game::to_dot(t);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0") != std::string::npos);
  CHECK(dot.find("label=\"Y\\nP:(a >< b) & !c\"") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("P:a") != std::string::npos);
  CHECK(dot.find("O:c") != std::string::npos);

  auto p = game_qcl::payoff(t, Interpretation::from_csv("a"));
  std::string annotated = game::to_dot(
      t, [&](int leaf) { return p.at(leaf).to_string(); });
  CHECK(annotated.find("P:a\\n1") != std::string::npos);
  CHECK(annotated.find("P:b\\ninf") != std::string::npos);
}
