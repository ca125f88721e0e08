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

#include "pidsym/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pidsym/errors.hpp"
#include "pidsym/state.hpp"

namespace pidsym {

namespace {

// What h must preserve about a single pid: its kind, and how often it
// occurs at each (place, component) position.
struct Profile {
  bool in_pids = false;
  bool generative = false;
  bool is_next = false;
  std::map<std::pair<std::string, std::size_t>, std::size_t> occurrences;

  friend bool operator==(const Profile&, const Profile&) = default;
};

struct Side {
  State state;
  PidSets sets;
  std::vector<Pid> domain;  // ascending
  std::map<Pid, Profile> profiles;

  Side(const Marking& m, std::string_view generator)
      : state(state_of(m, generator)), sets(pids_of(state)) {
    std::set<Pid> all = sets.pids;
    all.insert(sets.next_pids.begin(), sets.next_pids.end());
    domain.assign(all.begin(), all.end());
    for (const Pid& pi : domain) {
      Profile& p = profiles[pi];
      p.in_pids = sets.pids.contains(pi);
      p.generative = state.eta.contains(pi);
      p.is_next = sets.next_pids.contains(pi);
    }
    for (const auto& [place, bag] : state.sigma.places()) {
      for (const auto& [token, count] : bag) {
        for (std::size_t i = 0; i < token.size(); ++i) {
          if (!token[i].is_pid()) continue;
          profiles[token[i].as_pid()].occurrences[{place, i}] += count;
        }
      }
    }
  }

  // The generative pid whose next pid is `pi`, if any.
  std::optional<Pid> spawner_of(const Pid& pi) const {
    if (pi.empty()) return std::nullopt;
    Pid parent = pi.prefix();
    auto it = state.eta.find(parent);
    if (it == state.eta.end() ||
        static_cast<std::int64_t>(pi.last()) != it->second + 1) {
      return std::nullopt;
    }
    return parent;
  }

  bool in_pids(const Pid& pi) const { return profiles.at(pi).in_pids; }
};

class Search {
 public:
  Search(const Side& a, const Side& b) : a_(a), b_(b) {}

  bool seed(const PidBijection& fixed) {
    for (const auto& [x, y] : fixed.forward()) {
      if (!a_.profiles.contains(x)) continue;
      auto py = b_.profiles.find(y);
      if (py == b_.profiles.end() || py->second != a_.profiles.at(x)) {
        return false;
      }
      if (!consistent(x, y)) return false;
      if (!h_.insert(x, y)) return false;
    }
    return true;
  }

  std::optional<PidBijection> run() {
    if (extend(0)) return h_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t i) {
    if (i == a_.domain.size()) return tokens_match();
    const Pid& x = a_.domain[i];
    if (h_.image(x)) return extend(i + 1);
    const Profile& px = a_.profiles.at(x);
    for (const Pid& y : b_.domain) {
      if (h_.preimage(y) || b_.profiles.at(y) != px) continue;
      if (!consistent(x, y)) continue;
      h_.insert(x, y);
      if (extend(i + 1)) return true;
      h_.erase(x);
    }
    return false;
  }

  // Conditions 2 to 4 between x -> y and every pair already in h.
  bool consistent(const Pid& x, const Pid& y) const {
    if (auto nx = a_.state.next(x)) {
      if (auto hn = h_.image(*nx); hn && *hn != *b_.state.next(y)) return false;
    }
    if (auto g = a_.spawner_of(x)) {
      if (auto hg = h_.image(*g); hg && b_.state.next(*hg) != y) return false;
    }
    bool x_pid = a_.in_pids(x);
    for (const auto& [u, v] : h_.forward()) {
      if (x_pid && a_.in_pids(u)) {
        if (is_child(x, u) != is_child(y, v) ||
            is_child(u, x) != is_child(v, y) ||
            is_ancestor(x, u) != is_ancestor(y, v) ||
            is_ancestor(u, x) != is_ancestor(v, y)) {
          return false;
        }
      }
      if (is_next_sibling(x, u) != is_next_sibling(y, v) ||
          is_next_sibling(u, x) != is_next_sibling(v, y) ||
          is_elder_sibling(x, u) != is_elder_sibling(y, v) ||
          is_elder_sibling(u, x) != is_elder_sibling(v, y)) {
        return false;
      }
    }
    return true;
  }

  bool tokens_match() const {
    auto rename = [this](const Pid& pi) { return *h_.image(pi); };
    return a_.state.sigma.map_pids(rename) == b_.state.sigma;
  }

  const Side& a_;
  const Side& b_;
  PidBijection h_;
};

std::string profile_key(const Profile& p) {
  std::string s{static_cast<char>(p.in_pids), static_cast<char>(p.generative),
                static_cast<char>(p.is_next)};
  for (const auto& [pos, n] : p.occurrences) {
    s += "|" + pos.first + "#" + std::to_string(pos.second) + "=" +
         std::to_string(n);
  }
  return s;
}

std::multiset<std::string> profile_multiset(const Side& side) {
  std::multiset<std::string> out;
  for (const auto& [_, p] : side.profiles) out.insert(profile_key(p));
  return out;
}

bool same_shape(const Side& a, const Side& b) {
  if (a.domain.size() != b.domain.size() ||
      a.state.eta.size() != b.state.eta.size() ||
      a.sets.pids.size() != b.sets.pids.size()) {
    return false;
  }
  const auto& pa = a.state.sigma.places();
  const auto& pb = b.state.sigma.places();
  if (pa.size() != pb.size()) return false;
  for (auto ia = pa.begin(), ib = pb.begin(); ia != pa.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) {
      return false;
    }
  }
  return profile_multiset(a) == profile_multiset(b);
}

}  // namespace

std::string oracle_invariant(const Marking& m, std::string_view generator) {
  Side side(m, generator);
  std::string out = std::to_string(side.domain.size()) + "/" +
                    std::to_string(side.state.eta.size()) + "/" +
                    std::to_string(side.sets.pids.size());
  for (const auto& [place, bag] : side.state.sigma.places()) {
    out += "/" + place + ":" + std::to_string(bag.size());
  }
  for (const std::string& k : profile_multiset(side)) out += "/" + k;
  return out;
}

std::optional<PidBijection> state_equivalent(const Marking& m1,
                                             const Marking& m2,
                                             std::string_view generator,
                                             std::size_t max_pids,
                                             const PidBijection* fixed) {
  Side a(m1, generator);
  Side b(m2, generator);
  if (a.domain.size() > max_pids || b.domain.size() > max_pids) {
    throw TooManyPids(std::to_string(std::max(a.domain.size(),
                                              b.domain.size())) +
                      " pids exceed the oracle bound of " +
                      std::to_string(max_pids));
  }
  if (!same_shape(a, b)) return std::nullopt;
  Search search(a, b);
  if (fixed != nullptr && !search.seed(*fixed)) return std::nullopt;
  return search.run();
}

namespace {

bool successors_follow(const TNet& net, const Marking& m1, const Marking& m2,
                       const PidBijection& h, std::size_t max_pids) {
  const std::string& gen = net.generator();
  State s2 = state_of(m2, gen);
  for (const Firing& f : enabled(net, m1)) {
    const Transition& t = net.transitions()[f.transition];
    std::map<std::string, std::string> pid_of_counter;
    for (const auto& [p, c] : spawn_variables(net, t)) pid_of_counter[c] = p;

    Binding mapped;
    for (const auto& [var, value] : f.binding) {
      if (auto it = pid_of_counter.find(var); it != pid_of_counter.end()) {
        std::optional<Pid> hp = h.image(f.binding.at(it->second).as_pid());
        if (!hp || !s2.eta.contains(*hp)) return false;
        mapped[var] = Value(s2.eta.at(*hp));
      } else if (value.is_pid()) {
        std::optional<Pid> hp = h.image(value.as_pid());
        if (!hp) return false;
        mapped[var] = Value(*hp);
      } else {
        mapped[var] = value;
      }
    }
    if (!is_enabled(net, m2, f.transition, mapped)) return false;
    Marking n1 = fire(net, m1, f.transition, f.binding);
    Marking n2 = fire(net, m2, f.transition, mapped);
    if (!state_equivalent(n1, n2, gen, max_pids, &h)) return false;
  }
  return true;
}

}  // namespace

bool check_successor_correspondence(const TNet& net, const Marking& m1,
                                    const Marking& m2, const PidBijection& h,
                                    std::size_t max_pids) {
  return successors_follow(net, m1, m2, h, max_pids) &&
         successors_follow(net, m2, m1, h.inverse(), max_pids);
}

}  // namespace pidsym
