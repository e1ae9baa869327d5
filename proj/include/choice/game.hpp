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

#ifndef CHOICE_GAME_HPP
#define CHOICE_GAME_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace choice::game {

// Whose turn it is at a node (the labels I and Y).
enum class Turn { Me, You };

// Whether I currently act as proponent (P) or opponent (O) of the state.
enum class Role { Proponent, Opponent };

inline Role flip(Role r) {
  return r == Role::Proponent ? Role::Opponent : Role::Proponent;
}

struct AtomicState {
  Role role;
  std::string var;
};

// A finite game tree with labelled internal nodes, atomic leaves, and a
// strict preference order << on leaves (stored transitively closed).
// Nodes are created parent-first, so ids are preorder indices; the root
// is node 0.
class Tree {
 public:
  int add_internal(Turn label, Role role, std::string caption);
  int add_leaf(Role role, std::string var);
  void add_child(int parent, int child);
  // worse << better; call before close().
  void add_pref(int worse, int better);
  // Computes the transitive closure of <<, checks strictness, and
  // precomputes chain lengths. Queries below require a closed tree.
  void close();

  int root() const { return 0; }
  int size() const { return static_cast<int>(nodes_.size()); }
  bool is_leaf(int id) const { return node(id).leaf.has_value(); }
  Turn label(int id) const { return node(id).label; }
  Role role(int id) const { return node(id).role; }
  const std::string& caption(int id) const { return node(id).caption; }
  const std::vector<int>& children(int id) const { return node(id).children; }
  const AtomicState& atom(int id) const;
  const std::vector<int>& leaves() const { return leaves_; }

  // The closed relation, as sorted (worse, better) pairs.
  const std::vector<std::pair<int, int>>& prefs() const;
  bool prefers(int worse, int better) const;

  // Number of leaves on the longest strictly <<-increasing chain starting
  // at the given leaf; 1 when the leaf has no <<-successor.
  int longest_chain(int leaf) const;
  // Same, along the inverse relation >>.
  int longest_chain_inverted(int leaf) const;

 private:
  struct Node {
    Turn label = Turn::Me;
    Role role = Role::Proponent;
    std::string caption;
    std::vector<int> children;
    std::optional<AtomicState> leaf;
  };

  const Node& node(int id) const;

  std::vector<Node> nodes_;
  std::vector<int> leaves_;
  std::vector<std::pair<int, int>> pref_pairs_;  // closed after close()
  std::map<int, std::set<int>> above_;           // leaf -> <<-successors
  std::map<int, int> chain_up_, chain_down_;
  bool closed_ = false;
};

// A deterministic game plan: a choice of exactly one successor at every
// node labelled with the owner's letter. Represented as the node set
// containing the root, the chosen child of every owner-labelled node, and
// all children of every other-labelled node.
struct Strategy {
  Turn owner;
  std::set<int> chosen;
};

bool is_valid(const Tree& t, const Strategy& s);

// The unique leaf reached from the root when both players follow their
// strategies. Throws std::invalid_argument on invalid or same-owner input.
int outcome(const Tree& t, const Strategy& mine, const Strategy& yours);

inline constexpr long long kDefaultStrategyCap = 4096;

// All deterministic strategies for one player, ordered lexicographically
// by (preorder node, child index). Throws CapExceeded beyond the cap.
std::vector<Strategy> enumerate_strategies(
    const Tree& t, Turn owner, long long cap = kDefaultStrategyCap);

// Payoff assignment over a totally ordered domain with an upward-closed
// winning set.
template <typename Value>
struct Payoff {
  std::function<bool(const Value&, const Value&)> leq;
  std::function<bool(const Value&)> winning;
  std::map<int, Value> values;  // leaf id -> payoff

  const Value& at(int leaf) const {
    auto it = values.find(leaf);
    if (it == values.end()) {
      throw std::invalid_argument("leaf without payoff: " +
                                  std::to_string(leaf));
    }
    return it->second;
  }
};

template <typename Value>
struct Solution {
  Value value;
  Strategy mine;
  Strategy yours;
};

// Backward induction: leaves carry their payoff, nodes labelled I take the
// ⪯-maximum over children, nodes labelled Y the ⪯-minimum. Ties go to the
// leftmost child. The returned strategies realise the value.
template <typename Value>
Solution<Value> solve(const Tree& t, const Payoff<Value>& p);

// Literal max over My strategies of the min over Yours of the outcome
// payoff. Also computes the minmax value and insists the two coincide.
template <typename Value>
Value maxmin_oracle(const Tree& t, const Payoff<Value>& p,
                    long long cap = kDefaultStrategyCap);

// Graphviz rendering: internal nodes show their label and state text,
// leaves their atomic state (and payoff when a formatter is given); << is
// drawn as dashed edges from worse to better.
std::string to_dot(const Tree& t);
std::string to_dot(const Tree& t,
                   const std::function<std::string(int)>& leaf_payoff);

// -- template implementations ----------------------------------------------

namespace detail {

// Index of the ⪯-best child value, leftmost among ties; best=true picks
// the maximum, best=false the minimum.
template <typename Value>
int pick_child(const std::vector<Value>& vals,
               const std::function<bool(const Value&, const Value&)>& leq,
               bool maximize) {
  int best = 0;
  for (int k = 1; k < static_cast<int>(vals.size()); ++k) {
    bool strictly_better = maximize
                               ? (leq(vals[best], vals[k]) && !leq(vals[k], vals[best]))
                               : (leq(vals[k], vals[best]) && !leq(vals[best], vals[k]));
    if (strictly_better) best = k;
  }
  return best;
}

}  // namespace detail

template <typename Value>
Solution<Value> solve(const Tree& t, const Payoff<Value>& p) {
  const int n = t.size();
  std::vector<std::optional<Value>> val(n);
  std::map<int, int> my_choice, your_choice;

  // Children precede nothing: ids are preorder, so iterating backwards
  // visits every child before its parent.
  for (int id = n - 1; id >= 0; --id) {
    if (t.is_leaf(id)) {
      val[id] = p.at(id);
      continue;
    }
    const auto& kids = t.children(id);
    std::vector<Value> vals;
    vals.reserve(kids.size());
    for (int c : kids) vals.push_back(*val[c]);
    bool maximize = t.label(id) == Turn::Me;
    int k = detail::pick_child(vals, p.leq, maximize);
    (maximize ? my_choice : your_choice)[id] = kids[k];
    val[id] = vals[k];
  }

  auto build = [&](Turn owner, const std::map<int, int>& choice) {
    Strategy s{owner, {t.root()}};
    for (int id = 0; id < n; ++id) {
      if (t.is_leaf(id)) continue;
      if (t.label(id) == owner) {
        s.chosen.insert(choice.at(id));
      } else {
        for (int c : t.children(id)) s.chosen.insert(c);
      }
    }
    return s;
  };

  return Solution<Value>{*val[t.root()], build(Turn::Me, my_choice),
                         build(Turn::You, your_choice)};
}

template <typename Value>
Value maxmin_oracle(const Tree& t, const Payoff<Value>& p, long long cap) {
  auto mine = enumerate_strategies(t, Turn::Me, cap);
  auto yours = enumerate_strategies(t, Turn::You, cap);

  std::vector<std::vector<Value>> cell;
  cell.reserve(mine.size());
  for (const auto& si : mine) {
    std::vector<Value> row;
    row.reserve(yours.size());
    for (const auto& sy : yours) row.push_back(p.at(outcome(t, si, sy)));
    cell.push_back(std::move(row));
  }

  auto max_of = [&](const std::vector<Value>& xs) {
    return xs[detail::pick_child(xs, p.leq, true)];
  };
  auto min_of = [&](const std::vector<Value>& xs) {
    return xs[detail::pick_child(xs, p.leq, false)];
  };

  std::vector<Value> row_mins;
  row_mins.reserve(mine.size());
  for (const auto& row : cell) row_mins.push_back(min_of(row));
  Value maxmin = max_of(row_mins);

  std::vector<Value> col_maxs;
  col_maxs.reserve(yours.size());
  for (std::size_t j = 0; j < yours.size(); ++j) {
    std::vector<Value> col;
    col.reserve(mine.size());
    for (std::size_t i = 0; i < mine.size(); ++i) col.push_back(cell[i][j]);
    col_maxs.push_back(max_of(col));
  }
  Value minmax = min_of(col_maxs);

  if (!(p.leq(maxmin, minmax) && p.leq(minmax, maxmin))) {
    throw std::logic_error("maxmin and minmax values differ");
  }
  return maxmin;
}

}  // namespace choice::game

#endif  // CHOICE_GAME_HPP
