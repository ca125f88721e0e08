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

#ifndef PIDSYM_STATE_HPP_
#define PIDSYM_STATE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>

#include "pidsym/marking.hpp"
#include "pidsym/pid.hpp"

namespace pidsym {

// (sigma, eta): the marking without the generator place, and the spawn
// counter of every generative pid.
struct State {
  Marking sigma;
  std::map<Pid, std::int64_t> eta;

  // eta(pi) + 1 appended to pi; nullopt when pi is not generative.
  std::optional<Pid> next(const Pid& pi) const;

  friend bool operator==(const State&, const State&) = default;
};

// Throws MalformedGenerator if a generator token is not (non-empty pid,
// counter >= 0) or a pid has two generator tokens.
State state_of(const Marking& m, std::string_view generator);

struct PidSets {
  std::set<Pid> pids;       // occurring in sigma or generative
  std::set<Pid> next_pids;  // next(pi) for every generative pi
  std::set<Pid> active;     // appearing in some token, generator included
};

PidSets pids_of(const State& s);

// Every active pid and next-pid other than 1 has an active parent. Length-one
// pids have no parent to check.
bool is_clean(const Marking& m, std::string_view generator);
bool is_clean(const State& s);

}  // namespace pidsym

#endif  // PIDSYM_STATE_HPP_
