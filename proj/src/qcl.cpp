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

#include "choice/qcl.hpp"

#include <algorithm>

namespace choice::qcl {

Degree Degree::finite(long long k) {
  if (k < 1) throw std::invalid_argument("finite degree must be >= 1");
  return Degree(k);
}

long long Degree::value() const {
  if (!is_finite()) throw std::logic_error("value() on infinite degree");
  return k_;
}

std::string Degree::to_string() const {
  return is_finite() ? std::to_string(k_) : "inf";
}

bool leq(Degree a, Degree b) {
  if (!a.is_finite()) return true;
  if (!b.is_finite()) return false;
  return a.value() >= b.value();
}

bool winning(Degree d) { return d.is_finite(); }

long long optionality(const Formula& f) {
  switch (f.op) {
    case Op::Var:
    case Op::Not:
      return 1;
    case Op::And:
    case Op::Or:
      return std::max(optionality(*f.lhs), optionality(*f.rhs));
    case Op::Ord:
      return optionality(*f.lhs) + optionality(*f.rhs);
  }
  return 1;
}

Degree degree(const Formula& f, const Interpretation& i) {
  switch (f.op) {
    case Op::Var:
      return i.contains(f.name) ? Degree::finite(1) : Degree::infinity();
    case Op::Not:
      return degree(*f.lhs, i).is_finite() ? Degree::infinity()
                                           : Degree::finite(1);
    case Op::And: {
      Degree l = degree(*f.lhs, i), r = degree(*f.rhs, i);
      if (!l.is_finite() || !r.is_finite()) return Degree::infinity();
      return Degree::finite(std::max(l.value(), r.value()));
    }
    case Op::Or: {
      Degree l = degree(*f.lhs, i), r = degree(*f.rhs, i);
      if (!l.is_finite()) return r;
      if (!r.is_finite()) return l;
      return Degree::finite(std::min(l.value(), r.value()));
    }
    case Op::Ord: {
      Degree l = degree(*f.lhs, i);
      if (l.is_finite()) return l;
      Degree r = degree(*f.rhs, i);
      if (r.is_finite()) return Degree::finite(optionality(*f.lhs) + r.value());
      return Degree::infinity();
    }
  }
  return Degree::infinity();
}

PreferredModels preferred_models(const Formula& f, int cap) {
  std::set<std::string> universe = vars(f);
  unsigned long long count = subset_count(universe.size(), cap);
  std::vector<std::string> sorted(universe.begin(), universe.end());

  PreferredModels out;
  for (unsigned long long idx = 0; idx < count; ++idx) {
    Interpretation i = subset_at(sorted, idx);
    Degree d = degree(f, i);
    if (!d.is_finite()) continue;
    if (out.models.empty() || d.value() < out.degree.value()) {
      out.degree = d;
      out.models.clear();
      out.models.push_back(std::move(i));
    } else if (d.value() == out.degree.value()) {
      out.models.push_back(std::move(i));
    }
  }
  return out;
}

bool is_classical(const Formula& f) {
  switch (f.op) {
    case Op::Var:
      return true;
    case Op::Not:
      return is_classical(*f.lhs);
    case Op::Ord:
      return false;
    default:
      return is_classical(*f.lhs) && is_classical(*f.rhs);
  }
}

namespace {

FormulaPtr push(const Formula& f);

// Negation-pushed form of !f.
FormulaPtr push_neg(const Formula& f) {
  switch (f.op) {
    case Op::Var:
      return neg(var(f.name));
    case Op::Not:
      return push(*f.lhs);
    case Op::And:
      return disj(push_neg(*f.lhs), push_neg(*f.rhs));
    case Op::Or:
      return conj(push_neg(*f.lhs), push_neg(*f.rhs));
    case Op::Ord:
      return ord(push_neg(*f.lhs), push_neg(*f.rhs));
  }
  return nullptr;
}

FormulaPtr push(const Formula& f) {
  switch (f.op) {
    case Op::Var:
      return var(f.name);
    case Op::Not:
      return push_neg(*f.lhs);
    case Op::And:
      return conj(push(*f.lhs), push(*f.rhs));
    case Op::Or:
      return disj(push(*f.lhs), push(*f.rhs));
    case Op::Ord:
      return ord(push(*f.lhs), push(*f.rhs));
  }
  return nullptr;
}

}  // namespace

FormulaPtr pqcl_push_negation(const Formula& f) { return push(f); }

Degree pqcl_degree(const Formula& f, const Interpretation& i) {
  return degree(*pqcl_push_negation(f), i);
}

bool entails(const Formula& premise, const Formula& conclusion, int cap) {
  if (!is_classical(conclusion)) {
    throw std::invalid_argument(
        "entailment conclusion must be classical (no '><')");
  }
  std::set<std::string> universe = vars(premise);
  std::set<std::string> cvars = vars(conclusion);
  universe.insert(cvars.begin(), cvars.end());

  unsigned long long count = subset_count(universe.size(), cap);
  std::vector<std::string> sorted(universe.begin(), universe.end());

  // Best finite degree of the premise over the joint universe.
  long long best = -1;
  for (unsigned long long idx = 0; idx < count; ++idx) {
    Degree d = degree(premise, subset_at(sorted, idx));
    if (d.is_finite() && (best < 0 || d.value() < best)) best = d.value();
  }
  if (best < 0) return true;  // unsatisfiable premise

  for (unsigned long long idx = 0; idx < count; ++idx) {
    Interpretation i = subset_at(sorted, idx);
    Degree d = degree(premise, i);
    if (d.is_finite() && d.value() == best &&
        !degree(conclusion, i).is_finite()) {
      return false;
    }
  }
  return true;
}

}  // namespace choice::qcl
