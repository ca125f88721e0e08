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

#ifndef PIDSYM_EXPLORE_HPP_
#define PIDSYM_EXPLORE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pidsym/marking.hpp"
#include "pidsym/net.hpp"
#include "pidsym/oracle.hpp"

namespace pidsym {

// How successors are matched against visited states.
//   kNone      concrete markings, pids included
//   kStripped  signature of the stripped pid-tree
//   kExpanded  signature of the expanded pid-tree
//   kOracle    brute-force state equivalence against every candidate
enum class Mode { kNone, kStripped, kExpanded, kOracle };

const char* mode_name(Mode mode);
// Throws std::invalid_argument for unknown names.
Mode parse_mode(std::string_view name);

struct ExploreOptions {
  Mode mode = Mode::kStripped;
  std::size_t max_states = 100000;
  std::optional<std::size_t> max_depth;
  // Audit every merge of two distinct markings with the oracle and the
  // successor correspondence check, re-fire every edge, and check the
  // generator invariants on every stored state.
  bool validate = false;
  // Merges with more pids than this are counted as skipped by the audit.
  std::size_t audit_pid_bound = 8;
  // Bound handed to the oracle in kOracle mode; exceeding it is an error.
  std::size_t oracle_pid_bound = kDefaultOraclePidBound;
};

struct StateEdge {
  std::size_t from;
  std::size_t transition;
  Binding binding;  // the first binding found for this edge
  std::size_t to;
};

struct StateSpace {
  std::string model;
  Mode mode = Mode::kStripped;
  std::vector<Marking> states;  // representatives, in discovery order
  std::vector<std::string> keys;
  std::vector<std::size_t> depth;
  std::vector<StateEdge> edges;  // distinct (from, transition, to)
  bool truncated = false;
  std::size_t max_depth_reached = 0;
  double wall_ms = 0;
  std::size_t merges_audited = 0;
  std::size_t audit_skipped = 0;
  std::size_t audit_failures = 0;
  std::vector<std::string> failures;  // descriptions, capped
};

// Breadth-first exploration from the initial marking. Successors come from
// the stored representatives in enabled() order; a successor becomes a new
// state iff its key is unseen. Deterministic for a given net and options.
// Throws InvalidNet when validate(net) reports violations, and TooManyPids
// in kOracle mode when a state exceeds the oracle bound.
StateSpace explore(const TNet& net, const ExploreOptions& opts);

// The key of `m` under `mode` (for kOracle, the bucket invariant).
std::string state_key_bytes(const Marking& m, std::string_view generator,
                            Mode mode);

struct ModeReport {
  Mode mode;
  bool skipped = false;  // oracle mode above its pid bound
  std::string note;
  std::size_t states = 0;
  std::size_t edges = 0;
  bool truncated = false;
  double wall_ms = 0;
  std::size_t merges_audited = 0;
  std::size_t audit_failures = 0;
};

struct Report {
  std::string model;
  std::vector<ModeReport> rows;  // none, expanded, stripped, oracle
};

// Runs every mode with `opts` (mode ignored).
Report compare_reductions(const TNet& net, const ExploreOptions& opts);

// {model, mode, states, edges, truncated, max_depth_reached, wall_ms,
// merges_audited, audit_failures}
std::string to_json(const StateSpace& space);
std::string to_json(const Report& report);
std::string to_text(const Report& report);

// Quotient graph, one node per state labelled with its representative.
std::string to_dot(const TNet& net, const StateSpace& space);

}  // namespace pidsym

#endif  // PIDSYM_EXPLORE_HPP_
