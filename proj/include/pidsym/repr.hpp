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

#ifndef PIDSYM_REPR_HPP_
#define PIDSYM_REPR_HPP_

#include <set>
#include <string_view>

#include "pidsym/marking.hpp"
#include "pidsym/pid_tree.hpp"

namespace pidsym {

// The expanded pid-tree of `m`. Generator tokens add paths to their pid and
// its next pid; shared tokens (data first) go to the root; owned tokens go
// to the node of their first component. Every other pid component of a
// token adds a path.
PidTree represent(const Marking& m, std::string_view generator);

// True when `t` is a well-formed sibling-ordered tree obeying the three token
// rules for `m`, holding exactly the non-generator tokens of `m` at their
// owners, and whose locations lie between pid ∪ nextpid and their subpid
// closure.
bool is_representation(const PidTree& t, const Marking& m,
                       std::string_view generator);

// Splits every fragment into length-one edges, merging nodes that end up at
// the same location.
PidTree expand(const PidTree& t);

// Keeps the root and the nodes located at `retained`; the fragments of
// dropped nodes are prepended to their children's. Throws
// RetainedNotCovered when some retained pid is not a location of `t`, and
// IllFormedTree when a dropped node holds tokens.
PidTree strip(const PidTree& t, const std::set<Pid>& retained);

// strip(represent(m), active ∪ nextpid).
PidTree stripped_form(const Marking& m, std::string_view generator);

}  // namespace pidsym

#endif  // PIDSYM_REPR_HPP_
