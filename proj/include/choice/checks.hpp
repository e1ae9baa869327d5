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

#ifndef CHOICE_CHECKS_HPP
#define CHOICE_CHECKS_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "choice/formula.hpp"
#include "choice/game.hpp"
#include "choice/gcl.hpp"

namespace choice::checks {

// Deterministic formula source: same seed, same stream on every platform.
class FormulaGen {
 public:
  FormulaGen(unsigned long long seed, int max_vars);

  // Uniform choice among leaf and the four connectives, at most
  // max_connectives connectives in total.
  FormulaPtr by_connectives(int max_connectives);
  // Same distribution bounded by tree depth instead.
  FormulaPtr by_depth(int max_depth);

 private:
  unsigned long long next(unsigned long long n);

  std::mt19937_64 rng_;
  std::vector<std::string> pool_;
};

struct Options {
  unsigned long long seed = 1;
  int count = 500;
  int max_connectives = 8;
  int max_vars = 4;
  int var_cap = kDefaultVarCap;
  long long strategy_cap = game::kDefaultStrategyCap;
  int deep_depth = 10;  // depth bound for the extra round-trip formulas

  // Test hook: replaces the order used when solving the signed games.
  std::function<bool(const gcl::Degree&, const gcl::Degree&)> gcl_leq_override;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string counterexample;  // first failure, empty when passed
};

struct Report {
  unsigned long long seed = 0;
  int formulas = 0;
  std::vector<PropertyResult> properties;

  bool all_passed() const;
  const PropertyResult* find(const std::string& name) const;
  // One line per property plus a summary; stable across runs.
  std::string to_string() const;
};

// Runs every invariant of the toolkit over a seeded random corpus:
// degree bounds, ordered-disjunction associativity, negation laws, chain
// lengths, adequacy of both games, opponent-role claims, oracle agreement
// and parser round-trips.
Report run(const Options& opt);

}  // namespace choice::checks

#endif  // CHOICE_CHECKS_HPP
