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

#include "pidsym/explore.hpp"

#include <chrono>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "json.hpp"
#include "pidsym/equiv.hpp"
#include "pidsym/errors.hpp"
#include "pidsym/state.hpp"

namespace pidsym {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::kNone:
      return "none";
    case Mode::kStripped:
      return "stripped";
    case Mode::kExpanded:
      return "expanded";
    case Mode::kOracle:
      return "oracle";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  for (Mode m : {Mode::kNone, Mode::kStripped, Mode::kExpanded, Mode::kOracle}) {
    if (name == mode_name(m)) return m;
  }
  throw std::invalid_argument("unknown mode '" + std::string(name) +
                              "' (expected none, stripped, expanded or "
                              "oracle)");
}

std::string state_key_bytes(const Marking& m, std::string_view generator,
                            Mode mode) {
  switch (mode) {
    case Mode::kNone:
      return encode_marking(m);
    case Mode::kStripped:
      return state_key(m, generator, KeyForm::kStripped).bytes();
    case Mode::kExpanded:
      return state_key(m, generator, KeyForm::kExpanded).bytes();
    case Mode::kOracle:
      return oracle_invariant(m, generator);
  }
  return {};
}

namespace {

constexpr std::size_t kMaxFailureNotes = 20;

class Explorer {
 public:
  Explorer(const TNet& net, const ExploreOptions& opts)
      : net_(net), opts_(opts), gen_(net.generator()) {
    space_.model = net.name();
    space_.mode = opts.mode;
  }

  StateSpace run() {
    auto start = std::chrono::steady_clock::now();
    add_state(net_.initial(), state_key_bytes(net_.initial(), gen_, opts_.mode),
              0);
    std::deque<std::size_t> frontier{0};
    bool full = false;
    while (!frontier.empty() && !full) {
      std::size_t i = frontier.front();
      frontier.pop_front();
      std::vector<Firing> firings = enabled(net_, space_.states[i]);
      if (opts_.max_depth && space_.depth[i] >= *opts_.max_depth) {
        if (!firings.empty()) space_.truncated = true;
        continue;
      }
      for (const Firing& f : firings) {
        Marking succ = fire(net_, space_.states[i], f.transition, f.binding);
        std::string key = state_key_bytes(succ, gen_, opts_.mode);
        std::optional<std::size_t> j = lookup(succ, key);
        if (!j) {
          if (space_.states.size() >= opts_.max_states) {
            space_.truncated = true;
            full = true;
            break;
          }
          j = add_state(std::move(succ), std::move(key), space_.depth[i] + 1);
          frontier.push_back(*j);
        } else if (opts_.validate && succ != space_.states[*j]) {
          audit_merge(succ, *j);
        }
        if (edge_keys_.emplace(i, f.transition, *j).second) {
          space_.edges.push_back({i, f.transition, f.binding, *j});
        }
      }
    }
    if (opts_.validate) audit_edges();
    space_.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return std::move(space_);
  }

 private:
  std::optional<std::size_t> lookup(const Marking& m, const std::string& key) {
    if (opts_.mode != Mode::kOracle) {
      auto it = index_.find(key);
      if (it == index_.end()) return std::nullopt;
      return it->second;
    }
    auto it = buckets_.find(key);
    if (it == buckets_.end()) return std::nullopt;
    for (std::size_t j : it->second) {
      if (state_equivalent(m, space_.states[j], gen_, opts_.oracle_pid_bound)) {
        return j;
      }
    }
    return std::nullopt;
  }

  std::size_t add_state(Marking m, std::string key, std::size_t depth) {
    std::size_t id = space_.states.size();
    if (opts_.validate) check_invariants(m, id);
    if (opts_.mode == Mode::kOracle) {
      buckets_[key].push_back(id);
    } else {
      index_.emplace(key, id);
    }
    space_.states.push_back(std::move(m));
    space_.keys.push_back(std::move(key));
    space_.depth.push_back(depth);
    space_.max_depth_reached = std::max(space_.max_depth_reached, depth);
    return id;
  }

  void fail(std::string what) {
    ++space_.audit_failures;
    if (space_.failures.size() < kMaxFailureNotes) {
      space_.failures.push_back(std::move(what));
    }
  }

  void check_invariants(const Marking& m, std::size_t id) {
    try {
      PidSets sets = pids_of(state_of(m, gen_));
      for (const Pid& pi : sets.next_pids) {
        if (sets.pids.contains(pi)) {
          fail("state " + std::to_string(id) + ": next pid " +
               pi.to_string() + " already exists");
        }
      }
    } catch (const MalformedGenerator& e) {
      fail("state " + std::to_string(id) + ": " + e.what());
    }
  }

  void audit_merge(const Marking& succ, std::size_t j) {
    if (!audited_.emplace(j, encode_marking(succ)).second) return;
    const Marking& rep = space_.states[j];
    try {
      std::optional<PidBijection> h =
          state_equivalent(succ, rep, gen_, opts_.audit_pid_bound);
      ++space_.merges_audited;
      if (!h) {
        fail("merged " + succ.to_string() + " into state " +
             std::to_string(j) + " but the states are not equivalent");
      } else if (!check_successor_correspondence(net_, succ, rep, *h,
                                                 opts_.audit_pid_bound)) {
        fail("merged " + succ.to_string() + " into state " +
             std::to_string(j) + " but their successors differ under " +
             h->to_string());
      }
    } catch (const TooManyPids&) {
      ++space_.audit_skipped;
    }
  }

  void audit_edges() {
    for (const StateEdge& e : space_.edges) {
      Marking m;
      try {
        m = fire(net_, space_.states[e.from], e.transition, e.binding);
      } catch (const NotEnabled&) {
        fail("edge " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
             " does not re-fire");
        continue;
      }
      bool ok = false;
      if (opts_.mode == Mode::kOracle) {
        try {
          ok = state_equivalent(m, space_.states[e.to], gen_,
                                opts_.oracle_pid_bound)
                   .has_value();
        } catch (const TooManyPids&) {
          ok = true;
        }
      } else {
        ok = state_key_bytes(m, gen_, opts_.mode) == space_.keys[e.to];
      }
      if (!ok) {
        fail("edge " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
             " re-fires to a different key");
      }
    }
  }

  const TNet& net_;
  const ExploreOptions& opts_;
  const std::string& gen_;
  StateSpace space_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::vector<std::size_t>> buckets_;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> edge_keys_;
  std::set<std::pair<std::size_t, std::string>> audited_;
};

}  // namespace

StateSpace explore(const TNet& net, const ExploreOptions& opts) {
  std::vector<Violation> violations = validate(net);
  if (!violations.empty()) {
    std::string msg = "net '" + net.name() + "' is not a t-net:";
    for (const Violation& v : violations) msg += "\n  " + v.to_string();
    throw InvalidNet(msg);
  }
  if (opts.max_states < 1) {
    throw std::invalid_argument("max_states must be at least 1");
  }
  return Explorer(net, opts).run();
}

Report compare_reductions(const TNet& net, const ExploreOptions& opts) {
  Report report;
  report.model = net.name();
  for (Mode mode :
       {Mode::kNone, Mode::kExpanded, Mode::kStripped, Mode::kOracle}) {
    ExploreOptions o = opts;
    o.mode = mode;
    ModeReport row;
    row.mode = mode;
    try {
      StateSpace s = explore(net, o);
      row.states = s.states.size();
      row.edges = s.edges.size();
      row.truncated = s.truncated;
      row.wall_ms = s.wall_ms;
      row.merges_audited = s.merges_audited;
      row.audit_failures = s.audit_failures;
    } catch (const TooManyPids& e) {
      if (mode != Mode::kOracle) throw;
      row.skipped = true;
      row.note = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_json(const StateSpace& space) {
  nlohmann::ordered_json j;
  j["model"] = space.model;
  j["mode"] = mode_name(space.mode);
  j["states"] = space.states.size();
  j["edges"] = space.edges.size();
  j["truncated"] = space.truncated;
  j["max_depth_reached"] = space.max_depth_reached;
  j["wall_ms"] = space.wall_ms;
  j["merges_audited"] = space.merges_audited;
  j["audit_failures"] = space.audit_failures;
  return j.dump(2);
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["model"] = report.model;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ModeReport& r : report.rows) {
    nlohmann::ordered_json row;
    row["mode"] = mode_name(r.mode);
    row["skipped"] = r.skipped;
    if (!r.note.empty()) row["note"] = r.note;
    row["states"] = r.states;
    row["edges"] = r.edges;
    row["truncated"] = r.truncated;
    row["wall_ms"] = r.wall_ms;
    row["merges_audited"] = r.merges_audited;
    row["audit_failures"] = r.audit_failures;
    rows.push_back(std::move(row));
  }
  j["modes"] = std::move(rows);
  return j.dump(2);
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << "model " << report.model << "\n";
  std::size_t none_states = 0;
  for (const ModeReport& r : report.rows) {
    if (r.mode == Mode::kNone) none_states = r.states;
  }
  char line[160];
  std::snprintf(line, sizeof line, "%-9s %9s %9s %9s %10s %7s %9s\n", "mode",
                "states", "edges", "ratio", "wall_ms", "trunc", "audit");
  os << line;
  for (const ModeReport& r : report.rows) {
    if (r.skipped) {
      os << mode_name(r.mode) << "  skipped: " << r.note << "\n";
      continue;
    }
    double ratio = r.states == 0 ? 0.0
                                 : static_cast<double>(none_states) /
                                       static_cast<double>(r.states);
    std::string audit = std::to_string(r.merges_audited) + "/" +
                        std::to_string(r.audit_failures);
    std::snprintf(line, sizeof line, "%-9s %9zu %9zu %9.2f %10.1f %7s %9s\n",
                  mode_name(r.mode), r.states, r.edges, ratio, r.wall_ms,
                  r.truncated ? "yes" : "no", audit.c_str());
    os << line;
  }
  return os.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const TNet& net, const StateSpace& space) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(space.model) << "\" {\n"
     << "  node [shape=box, fontname=monospace];\n";
  for (std::size_t i = 0; i < space.states.size(); ++i) {
    os << "  s" << i << " [label=\"" << i << ": "
       << dot_escape(space.states[i].to_string()) << "\"];\n";
  }
  for (const StateEdge& e : space.edges) {
    os << "  s" << e.from << " -> s" << e.to << " [label=\""
       << dot_escape(net.transitions()[e.transition].name) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pidsym
