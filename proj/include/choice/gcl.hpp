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

#ifndef CHOICE_GCL_HPP
#define CHOICE_GCL_HPP

#include <optional>
#include <string>
#include <vector>

#include "choice/formula.hpp"

namespace choice::gcl {

// Signed satisfaction degree: a nonzero integer. Positive degrees mean the
// interpretation is a model, negative ones grade dissatisfaction. Under
// the total order ⊴, 1 is the global maximum and -1 the global minimum;
// see leq() below.
class Degree {
 public:
  explicit Degree(long long v);

  long long value() const { return v_; }
  bool positive() const { return v_ > 0; }

  Degree operator-() const { return Degree(-v_); }

  std::string to_string() const { return std::to_string(v_); }

  bool operator==(const Degree&) const = default;

 private:
  long long v_;
};

// The total order ⊴: every negative degree lies below every positive one,
// and on each sign the order is the inverse of the natural one, so
// ... -3, -2, -1 < ... and ... < 3, 2, 1 read bottom-up as
// -1 ⊴ -2 ⊴ -3 ⊴ ... ⊴ 3 ⊴ 2 ⊴ 1. Equivalently a ⊴ b iff 1/a <= 1/b
// over the rationals.
bool leq(Degree a, Degree b);
// Winning payoffs are the positive degrees.
bool winning(Degree d);

// Like the unsigned optionality, except negation preserves optionality.
long long optionality(const Formula& f);

// Signed degree: atoms evaluate to ±1, negation flips the sign,
// conjunction/disjunction take the ⊴-minimum/maximum, and ordered
// disjunction keeps a positive left degree, rewards a positive right
// degree by opt(lhs), and otherwise penalises the left degree by opt(rhs).
Degree degree(const Formula& f, const Interpretation& i);

struct PreferredModels {
  // Absent when no interpretation reaches a positive degree.
  std::optional<Degree> degree;
  std::vector<Interpretation> models;  // binary-counting order over vars(f)
};

PreferredModels preferred_models(const Formula& f, int cap = kDefaultVarCap);

}  // namespace choice::gcl

#endif  // CHOICE_GCL_HPP
