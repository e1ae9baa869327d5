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

#ifndef CHOICE_QCL_HPP
#define CHOICE_QCL_HPP

#include <string>
#include <vector>

#include "choice/formula.hpp"

namespace choice::qcl {

// Satisfaction degree in ℕ≥1 ∪ {∞}. The comparator ⪯ is the inverse of
// the natural order with ∞ at the bottom: 1 is the ⪯-maximum (best
// possible degree), ∞ the ⪯-minimum (not satisfied).
class Degree {
 public:
  static Degree finite(long long k);
  static Degree infinity() { return Degree(0); }

  bool is_finite() const { return k_ != 0; }
  // Finite degrees only.
  long long value() const;

  std::string to_string() const;  // "3" or "inf"

  bool operator==(const Degree&) const = default;

 private:
  explicit Degree(long long k) : k_(k) {}
  long long k_;  // 0 encodes ∞
};

// The total order ⪯ (a ⪯ b reads "a is at most as good as b").
bool leq(Degree a, Degree b);
// Winning payoffs are exactly the finite degrees.
bool winning(Degree d);

// Maximum finite degree the formula can attain: atoms and negations 1,
// conjunction/disjunction take the maximum, ordered disjunction the sum.
long long optionality(const Formula& f);

Degree degree(const Formula& f, const Interpretation& i);

struct PreferredModels {
  // ∞ with no models when the formula is unsatisfiable.
  Degree degree = Degree::infinity();
  std::vector<Interpretation> models;  // binary-counting order over vars(f)
};

PreferredModels preferred_models(const Formula& f, int cap = kDefaultVarCap);

// True when f contains no ordered disjunction.
bool is_classical(const Formula& f);

// Rewrites f so that negation is applied to atoms only:
// !(F & G) => !F | !G,  !(F | G) => !F & !G,  !(F >< G) => !F >< !G,
// !!F => F. Non-negated structure is unchanged.
FormulaPtr pqcl_push_negation(const Formula& f);

// Degree of the negation-pushed formula.
Degree pqcl_degree(const Formula& f, const Interpretation& i);

// True iff the conclusion holds classically in every preferred model of the
// premise, with interpretations drawn over the union of both variable sets.
// Vacuously true for an unsatisfiable premise. The conclusion must be
// classical (throws std::invalid_argument otherwise).
bool entails(const Formula& premise, const Formula& conclusion,
             int cap = kDefaultVarCap);

}  // namespace choice::qcl

#endif  // CHOICE_QCL_HPP
