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

#ifndef CHOICE_FORMULA_HPP
#define CHOICE_FORMULA_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace choice {

// Thrown when an enumeration would exceed the configured variable or
// strategy cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class Op { Var, Not, And, Or, Ord };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree over variables and the connectives !, &, | and
// the ordered disjunction ><. Negation stores its child in `lhs`.
struct Formula {
  Op op;
  std::string name;  // Op::Var only
  FormulaPtr lhs;
  FormulaPtr rhs;
};

// Identifiers match [a-z][a-zA-Z0-9_]*.
bool valid_identifier(std::string_view name);

// Node factories. var() rejects invalid identifiers.
FormulaPtr var(std::string name);
FormulaPtr neg(FormulaPtr f);
FormulaPtr conj(FormulaPtr l, FormulaPtr r);
FormulaPtr disj(FormulaPtr l, FormulaPtr r);
FormulaPtr ord(FormulaPtr l, FormulaPtr r);

bool equal(const Formula& a, const Formula& b);
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return equal(*a, *b);
}

// Recursive-descent parser for the grammar
//
//   formula := ord
//   ord     := or  ( "><" ord )?
//   or      := and ( "|"  or  )?
//   and     := not ( "&"  and )?
//   not     := "!" not | atom
//   atom    := ident | "(" formula ")"
//
// Binary connectives are right-associative; precedence is ! > & > | > ><.
// The Unicode spellings of the connectives are accepted on input.
// Throws ParseError with a 1-based line/column position.
FormulaPtr parse(std::string_view text);

// Canonical text with minimal parentheses; parse(print(f)) == f.
std::string print(const Formula& f);
inline std::string print(const FormulaPtr& f) { return print(*f); }

// The set of identifiers occurring in f, sorted.
std::set<std::string> vars(const Formula& f);

// A finite set of propositional variables.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::set<std::string> vs);

  // Parses a comma-separated variable list; "" denotes the empty set.
  static Interpretation from_csv(std::string_view csv);

  bool contains(const std::string& v) const { return vars_.count(v) > 0; }
  const std::set<std::string>& vars() const { return vars_; }
  bool empty() const { return vars_.empty(); }

  // "{a,b}"; members sorted.
  std::string to_string() const;
  // "a,b"; members sorted, no braces.
  std::string to_csv() const;

  bool operator==(const Interpretation&) const = default;
  bool operator<(const Interpretation& other) const {
    return vars_ < other.vars_;
  }

 private:
  std::set<std::string> vars_;
};

inline constexpr int kDefaultVarCap = 20;

// Number of subsets of an n-element variable set; throws CapExceeded when
// n exceeds the cap.
unsigned long long subset_count(std::size_t n_vars, int cap);

// The index-th subset of the sorted universe under binary counting, with
// the first (alphabetically least) variable as the most significant bit:
// index 0 is the empty set, the last index is the full set.
Interpretation subset_at(const std::vector<std::string>& sorted_universe,
                         unsigned long long index);

// All subsets of vars(f) in binary-counting order.
std::vector<Interpretation> all_interpretations(const Formula& f,
                                                int cap = kDefaultVarCap);
std::vector<Interpretation> all_subsets(const std::set<std::string>& universe,
                                        int cap);

}  // namespace choice

#endif  // CHOICE_FORMULA_HPP
