// Copyright 2026 The pidsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PIDSYM_TESTS_FIXTURES_HPP_
#define PIDSYM_TESTS_FIXTURES_HPP_

#include <array>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pidsym/marking.hpp"
#include "pidsym/pid.hpp"
#include "pidsym/pid_tree.hpp"

namespace pidsym::fixtures {

inline constexpr std::string_view kGen = "gen";

Pid pid(std::string_view text);
Token tok(std::initializer_list<Value> values);
Marking marking(
    std::initializer_list<std::pair<std::string, std::vector<Token>>> places);

using Children = std::vector<std::pair<std::string, PidTree>>;

// A node with children given as (fragment text, subtree).
PidTree node(Marking m, Children children = {});
// Same with an empty marking.
PidTree branch(Children children);
PidTree leaf();

// Four trees with identical shape, root -> 1 -> {a, b, c.1, c.2} and a
// grandchild, whose sibling offsets differ. The first two are equivalent.
struct SiblingOffsetQuartet {
  std::array<Marking, 4> markings;
  std::array<PidTree, 4> trees;
};
SiblingOffsetQuartet sibling_offset_quartet();

// Two markings whose expanded trees differ in shape but whose stripped
// trees have the same shape.
struct StripPair {
  Marking first;
  Marking second;
  PidTree first_expanded;
  PidTree second_expanded;
  PidTree first_stripped;
  PidTree second_stripped;
};
StripPair strip_pair();

// Two states related by swapping two cousins with inactive parents; their
// stripped trees are not equivalent.
struct IncompletePair {
  Marking first;
  Marking second;
  PidTree first_stripped;
  PidTree second_stripped;
};
IncompletePair incomplete_pair();

// One marking, its expanded tree and a second valid tree with a merged
// edge 1.2 below node 1.
struct TwoRepresentations {
  Marking marking;
  PidTree expanded;
  PidTree merged;
};
TwoRepresentations two_representations();

// Trees over a data place x: a branching tree, a tree included in it, and
// the path to 1.1.1 at both granularities.
struct InclusionTrees {
  PidTree branching;
  PidTree included;
  PidTree path_expanded;
  PidTree path_single_edge;
  Marking leaf_marking;  // at 1.1.1 in the last three
};
InclusionTrees inclusion_trees();

// Model text: a generator and one transition that spawns a child.
std::string one_spawn_model();
// Model text: one data place, the generator, a spawn and a tick transition.
std::string spawn_tick_model();
// The root spawns two middles; each middle spawns a leaf and exits, so the
// leaves outlive their parents.
std::string orphan_model();
// One data counter stepped 0..3, no spawning.
std::string single_path_model();

}  // namespace pidsym::fixtures

#endif  // PIDSYM_TESTS_FIXTURES_HPP_
