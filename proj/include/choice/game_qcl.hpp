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

#ifndef CHOICE_GAME_QCL_HPP
#define CHOICE_GAME_QCL_HPP

#include "choice/formula.hpp"
#include "choice/game.hpp"
#include "choice/qcl.hpp"

namespace choice::game_qcl {

// Evaluation game for the unsigned degree semantics. In proponent role,
// conjunctions hand the turn to You and the other connectives to Me;
// ordered disjunction prefers every left-subtree outcome over every
// right-subtree one. Negation switches roles and erases all preferences
// below it; opponent-role subtrees swap the turn labels and carry no
// preferences at all.
game::Tree build_tree(game::Role role, const Formula& f);

// A leaf is true when its proponent atom is in the interpretation or its
// opponent atom is not. True leaves pay the length of the longest
// <<-chain starting there, false leaves pay ∞.
game::Payoff<qcl::Degree> payoff(const game::Tree& t, const Interpretation& i);

// Value of the proponent-rooted game; coincides with qcl::degree.
qcl::Degree value(const Formula& f, const Interpretation& i);

}  // namespace choice::game_qcl

#endif  // CHOICE_GAME_QCL_HPP
