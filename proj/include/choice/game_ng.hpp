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

#ifndef CHOICE_GAME_NG_HPP
#define CHOICE_GAME_NG_HPP

#include "choice/formula.hpp"
#include "choice/game.hpp"
#include "choice/gcl.hpp"

namespace choice::game_ng {

// Symmetric evaluation game. Structure matches the unsigned game, but
// negation keeps the preferences built for the switched role, and
// opponent-role subtrees invert the orientation of ordered-disjunction
// preferences instead of dropping them.
game::Tree build_tree(game::Role role, const Formula& f);

// Signed payoff: true leaves pay the length of the longest <<-chain
// starting there, false leaves pay minus the longest chain along the
// inverse relation >>.
game::Payoff<gcl::Degree> payoff(const game::Tree& t, const Interpretation& i);

// Value of the proponent-rooted game; coincides with gcl::degree.
gcl::Degree value(const Formula& f, const Interpretation& i);

}  // namespace choice::game_ng

#endif  // CHOICE_GAME_NG_HPP
