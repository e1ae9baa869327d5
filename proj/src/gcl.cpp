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

#include "choice/gcl.hpp"

namespace choice::gcl {

Degree::Degree(long long v) : v_(v) {
  if (v == 0) throw std::invalid_argument("signed degree must be nonzero");
}

bool leq(Degree a, Degree b) {
  long long x = a.value(), y = b.value();
  if (x < 0 && y > 0) return true;
  if (x > 0 && y < 0) return false;
  return x >= y;  // same sign: inverse of the natural order
}

bool winning(Degree d) { return d.positive(); }

long long optionality(const Formula& f) {
  switch (f.op) {
    case Op::Var:
      return 1;
    case Op::Not:
      return optionality(*f.lhs);
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
      return Degree(i.contains(f.name) ? 1 : -1);
    case Op::Not:
      return -degree(*f.lhs, i);
    case Op::And: {
      Degree l = degree(*f.lhs, i), r = degree(*f.rhs, i);
      return leq(l, r) ? l : r;
    }
    case Op::Or: {
      Degree l = degree(*f.lhs, i), r = degree(*f.rhs, i);
      return leq(l, r) ? r : l;
    }
    case Op::Ord: {
      Degree l = degree(*f.lhs, i);
      if (l.positive()) return l;
      Degree r = degree(*f.rhs, i);
      if (r.positive()) return Degree(optionality(*f.lhs) + r.value());
      return Degree(l.value() - optionality(*f.rhs));
    }
  }
  return Degree(-1);
}

PreferredModels preferred_models(const Formula& f, int cap) {
  std::set<std::string> universe = vars(f);
  unsigned long long count = subset_count(universe.size(), cap);
  std::vector<std::string> sorted(universe.begin(), universe.end());

  PreferredModels out;
  for (unsigned long long idx = 0; idx < count; ++idx) {
    Interpretation i = subset_at(sorted, idx);
    Degree d = degree(f, i);
    if (!d.positive()) continue;
    if (!out.degree || d.value() < out.degree->value()) {
      out.degree = d;
      out.models.clear();
      out.models.push_back(std::move(i));
    } else if (d.value() == out.degree->value()) {
      out.models.push_back(std::move(i));
    }
  }
  return out;
}

}  // namespace choice::gcl
