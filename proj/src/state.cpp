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

#include "pidsym/state.hpp"

#include "pidsym/errors.hpp"

namespace pidsym {

std::optional<Pid> State::next(const Pid& pi) const {
  auto it = eta.find(pi);
  if (it == eta.end()) return std::nullopt;
  return pi.child(static_cast<Pid::Part>(it->second + 1));
}

State state_of(const Marking& m, std::string_view generator) {
  State s;
  s.sigma = m.without(generator);
  for (const auto& [token, count] : m.tokens(generator)) {
    if (token.size() != 2 || !token[0].is_pid() || token[0].as_pid().empty() ||
        !token[1].is_int() || token[1].as_int() < 0) {
      throw MalformedGenerator("bad generator token " + to_string(token));
    }
    if (count != 1 || !s.eta.emplace(token[0].as_pid(), token[1].as_int())
                           .second) {
      throw MalformedGenerator("pid " + token[0].as_pid().to_string() +
                               " has several generator tokens");
    }
  }
  return s;
}

PidSets pids_of(const State& s) {
  PidSets out;
  for (const auto& [place, bag] : s.sigma.places()) {
    for (const auto& [token, _] : bag) {
      for (const Value& v : token) {
        if (v.is_pid()) out.pids.insert(v.as_pid());
      }
    }
  }
  for (const auto& [pi, k] : s.eta) {
    out.pids.insert(pi);
    out.next_pids.insert(pi.child(static_cast<Pid::Part>(k + 1)));
  }
  out.active = out.pids;
  return out;
}

bool is_clean(const State& s) {
  PidSets sets = pids_of(s);
  auto parent_ok = [&](const Pid& pi) {
    if (pi.length() <= 1) return true;
    return sets.active.contains(pi.prefix());
  };
  for (const Pid& pi : sets.active) {
    if (!parent_ok(pi)) return false;
  }
  for (const Pid& pi : sets.next_pids) {
    if (!parent_ok(pi)) return false;
  }
  return true;
}

bool is_clean(const Marking& m, std::string_view generator) {
  return is_clean(state_of(m, generator));
}

}  // namespace pidsym
