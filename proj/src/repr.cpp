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

#include "pidsym/repr.hpp"

#include <map>
#include <vector>

#include "pidsym/errors.hpp"
#include "pidsym/state.hpp"

namespace pidsym {

namespace {

// Node markings by location. Building a tree hangs every location below its
// longest proper prefix that is also a location, so the map must hold ().
class NodeSet {
 public:
  NodeSet() { nodes_[Pid()]; }

  // Adds `pi` and all its prefixes.
  void add_path(const Pid& pi) {
    for (std::size_t k = 1; k <= pi.length(); ++k) nodes_[pi.head(k)];
  }
  void add_node(const Pid& pi) { nodes_[pi]; }
  Marking& at(const Pid& pi) { return nodes_[pi]; }

  PidTree build() const {
    std::map<Pid, std::vector<Pid>> kids;
    for (const auto& [pi, _] : nodes_) {
      if (pi.empty()) continue;
      std::size_t k = pi.length();
      while (k-- > 0) {
        Pid head = pi.head(k);
        if (nodes_.contains(head)) {
          kids[head].push_back(pi);
          break;
        }
      }
    }
    return make(Pid(), kids);
  }

 private:
  PidTree make(const Pid& at,
               const std::map<Pid, std::vector<Pid>>& kids) const {
    std::vector<PidTree::Edge> edges;
    if (auto it = kids.find(at); it != kids.end()) {
      for (const Pid& c : it->second) {
        edges.push_back({c.tail(at.length()), make(c, kids)});
      }
    }
    return PidTree(nodes_.at(at), std::move(edges));
  }

  std::map<Pid, Marking> nodes_;
};

}  // namespace

PidTree represent(const Marking& m, std::string_view generator) {
  NodeSet nodes;
  for (const auto& [place, bag] : m.places()) {
    bool gen = place == generator;
    for (const auto& [token, count] : bag) {
      if (gen) {
        if (token.size() != 2 || !token[0].is_pid() || !token[1].is_int() ||
            token[1].as_int() < 0 || token[0].as_pid().empty()) {
          throw MalformedGenerator("bad generator token " + to_string(token));
        }
        const Pid& pi = token[0].as_pid();
        nodes.add_path(pi);
        nodes.add_path(pi.child(static_cast<Pid::Part>(token[1].as_int() + 1)));
        continue;
      }
      for (const Value& v : token) {
        if (v.is_pid()) nodes.add_path(v.as_pid());
      }
      Pid owner = token.front().is_pid() ? token.front().as_pid() : Pid();
      nodes.at(owner).add(place, token, count);
    }
  }
  return nodes.build();
}

PidTree expand(const PidTree& t) {
  NodeSet nodes;
  for (const Subtree& s : subtrees(t)) {
    nodes.add_path(s.at);
    nodes.at(s.at).merge(s.tree->marking());
  }
  return nodes.build();
}

PidTree strip(const PidTree& t, const std::set<Pid>& retained) {
  NodeSet nodes;
  std::size_t covered = 0;
  for (const Subtree& s : subtrees(t)) {
    bool keep = retained.contains(s.at);
    if (keep) ++covered;
    if (keep || s.at.empty()) {
      nodes.add_node(s.at);
      nodes.at(s.at).merge(s.tree->marking());
    } else if (!s.tree->marking().empty()) {
      throw IllFormedTree("stripping " + s.at.to_string() +
                          " would drop its tokens");
    }
  }
  if (covered != retained.size()) {
    for (const Pid& pi : retained) {
      if (t.find(pi) == nullptr) {
        throw RetainedNotCovered(pi.to_string() +
                                 " is not a location of the tree");
      }
    }
  }
  return nodes.build();
}

PidTree stripped_form(const Marking& m, std::string_view generator) {
  PidSets sets = pids_of(state_of(m, generator));
  std::set<Pid> retained = sets.active;
  retained.insert(sets.next_pids.begin(), sets.next_pids.end());
  return strip(represent(m, generator), retained);
}

bool is_representation(const PidTree& t, const Marking& m,
                       std::string_view generator) {
  if (!check_wf(t) || !is_sibling_ordered(t)) return false;
  State s;
  try {
    s = state_of(m, generator);
  } catch (const MalformedGenerator&) {
    return false;
  }
  PidSets sets = pids_of(s);
  std::set<Pid> locations = pids(t);

  // Lower bound, which also covers every path the token rules ask for.
  for (const auto* group : {&sets.pids, &sets.next_pids}) {
    for (const Pid& pi : *group) {
      if (!locations.contains(pi)) return false;
    }
  }
  // Upper bound.
  std::set<Pid> closure = sets.next_pids;
  closure.insert(Pid());
  for (const Pid& pi : sets.pids) {
    std::set<Pid> sub = subpids(pi);
    closure.insert(sub.begin(), sub.end());
  }
  for (const Pid& pi : locations) {
    if (!closure.contains(pi)) return false;
  }

  // Each token sits at its owner, and nothing else is in the tree.
  std::map<Pid, Marking> expected;
  for (const auto& [place, bag] : s.sigma.places()) {
    for (const auto& [token, count] : bag) {
      Pid owner = token.front().is_pid() ? token.front().as_pid() : Pid();
      expected[owner].add(place, token, count);
    }
  }
  for (const Subtree& st : subtrees(t)) {
    auto it = expected.find(st.at);
    const Marking& want = it == expected.end() ? Marking() : it->second;
    if (st.tree->marking() != want) return false;
  }
  return true;
}

}  // namespace pidsym
