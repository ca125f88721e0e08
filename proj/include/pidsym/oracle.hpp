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

#ifndef PIDSYM_ORACLE_HPP_
#define PIDSYM_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pidsym/equiv.hpp"
#include "pidsym/marking.hpp"
#include "pidsym/net.hpp"

namespace pidsym {

inline constexpr std::size_t kDefaultOraclePidBound = 10;

// Brute-force state equivalence. Looks for a bijection h from pid ∪ nextpid
// of m1 onto that of m2 which
//   1. maps generative pids exactly onto generative pids,
//   2. commutes with next: h(next(pi)) = next(h(pi)),
//   3. preserves child and ancestor among pids,
//   4. preserves next-sibling and elder-sibling among pids and next-pids,
//   5. turns the non-generator tokens of m1 into those of m2.
// Candidates are tried in hierarchical order and the first bijection found
// is returned. When `fixed` is given, h must agree with it wherever both
// are defined.
//
// Throws TooManyPids when either side has more than `max_pids` pids and
// next-pids together.
std::optional<PidBijection> state_equivalent(
    const Marking& m1, const Marking& m2, std::string_view generator,
    std::size_t max_pids = kDefaultOraclePidBound,
    const PidBijection* fixed = nullptr);

// A string equal for any two markings state_equivalent could accept; used
// to bucket candidates before the search.
std::string oracle_invariant(const Marking& m, std::string_view generator);

// For every firing (t, b) at m1, (t, h∘b) is enabled at m2 (counters taken
// from m2's generator place) and the two successors are equivalent through
// some bijection agreeing with h on their common domain; and the same from
// m2 with h inverted.
bool check_successor_correspondence(
    const TNet& net, const Marking& m1, const Marking& m2,
    const PidBijection& h, std::size_t max_pids = kDefaultOraclePidBound);

}  // namespace pidsym

#endif  // PIDSYM_ORACLE_HPP_
