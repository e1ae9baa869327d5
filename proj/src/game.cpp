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

#include <algorithm>
#include <sstream>

#include "choice/formula.hpp"  // CapExceeded

namespace choice::game {

const Tree::Node& Tree::node(int id) const {
  if (id < 0 || id >= static_cast<int>(nodes_.size())) {
    throw std::invalid_argument("no such node: " + std::to_string(id));
  }
  return nodes_[id];
}

int Tree::add_internal(Turn label, Role role, std::string caption) {
  Node n;
  n.label = label;
  n.role = role;
  n.caption = std::move(caption);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int Tree::add_leaf(Role role, std::string var) {
  Node n;
  n.role = role;
  n.caption = (role == Role::Proponent ? "P:" : "O:") + var;
  n.leaf = AtomicState{role, std::move(var)};
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(n));
  leaves_.push_back(id);
  return id;
}

void Tree::add_child(int parent, int child) {
  if (is_leaf(parent)) {
    throw std::invalid_argument("cannot attach children to a leaf");
  }
  nodes_[parent].children.push_back(child);
}

void Tree::add_pref(int worse, int better) {
  if (closed_) throw std::logic_error("add_pref after close()");
  if (!is_leaf(worse) || !is_leaf(better)) {
    throw std::invalid_argument("preferences relate leaves only");
  }
  pref_pairs_.emplace_back(worse, better);
}

void Tree::close() {
  if (closed_) return;
  for (auto [w, b] : pref_pairs_) above_[w].insert(b);

  // Transitive closure; leaf counts are formula-sized.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [w, succs] : above_) {
      std::set<int> add;
      for (int m : succs) {
        auto it = above_.find(m);
        if (it == above_.end()) continue;
        for (int b : it->second) {
          if (!succs.count(b)) add.insert(b);
        }
      }
      if (!add.empty()) {
        succs.insert(add.begin(), add.end());
        changed = true;
      }
    }
  }

  pref_pairs_.clear();
  for (const auto& [w, succs] : above_) {
    if (succs.count(w)) {
      throw std::logic_error("preference order is not strict");
    }
    for (int b : succs) pref_pairs_.emplace_back(w, b);
  }
  std::sort(pref_pairs_.begin(), pref_pairs_.end());

  // Longest chains in both directions over the closed relation.
  std::map<int, std::set<int>> below;
  for (auto [w, b] : pref_pairs_) below[b].insert(w);

  // With the closure in hand, the longest chain from x is one more than
  // the longest chain from its best successor; memoised recursion.
  std::function<int(int, const std::map<int, std::set<int>>&,
                    std::map<int, int>&)>
      chain = [&](int x, const std::map<int, std::set<int>>& next,
                  std::map<int, int>& memo) -> int {
    auto m = memo.find(x);
    if (m != memo.end()) return m->second;
    int best = 1;
    auto it = next.find(x);
    if (it != next.end()) {
      for (int y : it->second) best = std::max(best, 1 + chain(y, next, memo));
    }
    memo[x] = best;
    return best;
  };
  for (int leaf : leaves_) {
    chain(leaf, above_, chain_up_);
    chain(leaf, below, chain_down_);
  }
  closed_ = true;
}

const AtomicState& Tree::atom(int id) const {
  const Node& n = node(id);
  if (!n.leaf) throw std::invalid_argument("not a leaf: " + std::to_string(id));
  return *n.leaf;
}

const std::vector<std::pair<int, int>>& Tree::prefs() const {
  if (!closed_) throw std::logic_error("tree not closed");
  return pref_pairs_;
}

bool Tree::prefers(int worse, int better) const {
  if (!closed_) throw std::logic_error("tree not closed");
  auto it = above_.find(worse);
  return it != above_.end() && it->second.count(better) > 0;
}

int Tree::longest_chain(int leaf) const {
  if (!closed_) throw std::logic_error("tree not closed");
  auto it = chain_up_.find(leaf);
  if (it == chain_up_.end()) {
    throw std::invalid_argument("not a leaf: " + std::to_string(leaf));
  }
  return it->second;
}

int Tree::longest_chain_inverted(int leaf) const {
  if (!closed_) throw std::logic_error("tree not closed");
  auto it = chain_down_.find(leaf);
  if (it == chain_down_.end()) {
    throw std::invalid_argument("not a leaf: " + std::to_string(leaf));
  }
  return it->second;
}

bool is_valid(const Tree& t, const Strategy& s) {
  if (!s.chosen.count(t.root())) return false;
  for (int id : s.chosen) {
    if (id < 0 || id >= t.size()) return false;
    if (t.is_leaf(id)) continue;
    const auto& kids = t.children(id);
    if (t.label(id) == s.owner) {
      int picked = 0;
      for (int c : kids) picked += s.chosen.count(c);
      if (picked != 1) return false;
    } else {
      for (int c : kids) {
        if (!s.chosen.count(c)) return false;
      }
    }
  }
  return true;
}

int outcome(const Tree& t, const Strategy& mine, const Strategy& yours) {
  if (mine.owner != Turn::Me || yours.owner != Turn::You) {
    throw std::invalid_argument("outcome() needs one strategy per player");
  }
  if (!is_valid(t, mine) || !is_valid(t, yours)) {
    throw std::invalid_argument("invalid strategy");
  }
  int at = t.root();
  while (!t.is_leaf(at)) {
    const Strategy& turn = t.label(at) == Turn::Me ? mine : yours;
    int next = -1;
    for (int c : t.children(at)) {
      if (turn.chosen.count(c)) {
        next = c;
        break;
      }
    }
    if (next < 0) throw std::invalid_argument("strategy undefined at a node");
    at = next;
  }
  return at;
}

std::vector<Strategy> enumerate_strategies(const Tree& t, Turn owner,
                                           long long cap) {
  std::vector<int> own_nodes;
  for (int id = 0; id < t.size(); ++id) {
    if (!t.is_leaf(id) && t.label(id) == owner) own_nodes.push_back(id);
  }

  long long count = 1;
  for (int id : own_nodes) {
    count *= static_cast<long long>(t.children(id).size());
    if (count > cap) {
      throw CapExceeded("strategy enumeration cap exceeded");
    }
  }

  // Base set: root plus all children of the other player's nodes.
  std::set<int> base{t.root()};
  for (int id = 0; id < t.size(); ++id) {
    if (t.is_leaf(id) || t.label(id) == owner) continue;
    for (int c : t.children(id)) base.insert(c);
  }

  std::vector<Strategy> out;
  out.reserve(count);
  std::vector<std::size_t> digit(own_nodes.size(), 0);
  for (long long k = 0; k < count; ++k) {
    Strategy s{owner, base};
    for (std::size_t i = 0; i < own_nodes.size(); ++i) {
      s.chosen.insert(t.children(own_nodes[i])[digit[i]]);
    }
    out.push_back(std::move(s));
    // Odometer over child indices, last node fastest.
    for (std::size_t i = own_nodes.size(); i-- > 0;) {
      if (++digit[i] < t.children(own_nodes[i]).size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string render_dot(const Tree& t,
                       const std::function<std::string(int)>* leaf_payoff) {
  std::ostringstream os;
  os << "digraph game {\n";
  for (int id = 0; id < t.size(); ++id) {
    os << "  n" << id << " [";
    if (t.is_leaf(id)) {
      std::string label = dot_escape(t.caption(id));
      if (leaf_payoff) label += "\\n" + dot_escape((*leaf_payoff)(id));
      os << "shape=ellipse, label=\"" << label << "\"";
    } else {
      const char* turn = t.label(id) == Turn::Me ? "I" : "Y";
      os << "shape=box, label=\"" << turn << "\\n" << dot_escape(t.caption(id))
         << "\"";
    }
    os << "];\n";
  }
  for (int id = 0; id < t.size(); ++id) {
    for (int c : t.children(id)) {
      os << "  n" << id << " -> n" << c << ";\n";
    }
  }
  for (auto [worse, better] : t.prefs()) {
    os << "  n" << worse << " -> n" << better
       << " [style=dashed, constraint=false, label=\"<<\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const Tree& t) { return render_dot(t, nullptr); }

std::string to_dot(const Tree& t,
                   const std::function<std::string(int)>& leaf_payoff) {
  return render_dot(t, &leaf_payoff);
}

}  // namespace choice::game
