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

#ifndef PIDSYM_TESTS_PROPERTIES_HPP_
#define PIDSYM_TESTS_PROPERTIES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pidsym/model_format.hpp"
#include "pidsym/net.hpp"

namespace pidsym::props {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;  // first few only
  std::string note;                          // coverage counts

  bool ok() const { return counterexamples.empty(); }
  void fail(std::string what);
};

// Reads models/<file> from the source tree.
TNet load_model(const std::string& file, const Defines& defines = {});
std::vector<std::string> bundled_models();

// Order, relation and monoid laws on random pids.
PropertyResult pid_laws(std::uint64_t seed, std::size_t cases);
// Sibling ordering, expansion and stripping keep trees well formed;
// sibling ordering is idempotent and undoes any shuffle of children.
PropertyResult well_formedness(std::uint64_t seed, std::size_t cases);
// Tree inclusion is reflexive, antisymmetric and transitive.
PropertyResult inclusion_order(std::uint64_t seed, std::size_t cases);
// pid ∪ nextpid ⊆ locations ⊆ subpid closure ∪ nextpid for both canonical
// forms of reachable markings.
PropertyResult location_bounds(std::uint64_t seed, std::size_t walks);
// The node markings of a representation add up to the marking.
PropertyResult reconstruction(std::uint64_t seed, std::size_t walks);
// expand and strip are idempotent, agree on every representation of a
// marking, and coincide on clean markings.
PropertyResult canonical_forms(std::uint64_t seed, std::size_t walks);
// Equal signatures exactly when the checker finds a correspondence.
PropertyResult checker_signature(std::uint64_t seed, std::size_t pairs);
// Tree equivalence is reflexive, symmetric and transitive, and the
// correspondence inverts and composes.
PropertyResult equivalence_laws(std::uint64_t seed, std::size_t cases);

// Everything above at the given scale (1 = the standalone suite's size).
std::vector<PropertyResult> run_all(std::uint64_t seed, std::size_t scale);

}  // namespace pidsym::props

#endif  // PIDSYM_TESTS_PROPERTIES_HPP_
