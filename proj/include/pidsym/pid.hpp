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

#ifndef PIDSYM_PID_HPP_
#define PIDSYM_PID_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pidsym {

// A process identifier: a tuple of positive integers recording spawn
// ancestry. The empty tuple is written "()" and is the identity of
// concatenation. Pids are immutable values with a cached hash.
//
// operator<=> is the hierarchical order: shorter pids first, equal lengths
// compared lexicographically. The empty pid is the minimum.
class Pid {
 public:
  using Part = std::uint32_t;

  Pid() : hash_(compute_hash({})) {}
  Pid(std::initializer_list<Part> parts);
  explicit Pid(std::vector<Part> parts);

  // Parses "a.b.c" or "()". Throws std::invalid_argument on bad input,
  // including zero components.
  static Pid parse(std::string_view text);

  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::span<const Part> parts() const { return parts_; }
  Part operator[](std::size_t i) const { return parts_[i]; }
  // Last component; requires !empty().
  Part last() const { return parts_.back(); }

  // All components but the last; () when length <= 1.
  Pid prefix() const;
  // This pid followed by `k`.
  Pid child(Part k) const;
  // The first `n` components.
  Pid head(std::size_t n) const;
  // Components from index `n` on.
  Pid tail(std::size_t n) const;
  // True when this pid is a (not necessarily proper) prefix of `other`.
  bool is_prefix_of(const Pid& other) const;

  std::string to_string() const;
  std::size_t hash() const { return hash_; }

  friend bool operator==(const Pid& a, const Pid& b) {
    return a.hash_ == b.hash_ && a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Pid& a, const Pid& b);

 private:
  static std::size_t compute_hash(std::span<const Part> parts);

  std::vector<Part> parts_;
  std::size_t hash_;
};

std::ostream& operator<<(std::ostream& os, const Pid& pid);

// Concatenation; () is the identity.
Pid concat(const Pid& a, const Pid& b);

// {p} ∪ subpids(prefix(p)) for non-empty p, the empty set otherwise. The empty
// pid is never a member.
std::set<Pid> subpids(const Pid& p);

// The relations pids may be compared with inside a model.
enum class PidRelation {
  kEqual,         // =
  kChild,         // p.a = q
  kAncestor,      // p is a proper prefix of q
  kNextSibling,   // same non-empty prefix, last components i and i+1
  kElderSibling,  // same non-empty prefix, last components i < j
};

bool is_child(const Pid& p, const Pid& q);
bool is_ancestor(const Pid& p, const Pid& q);
bool is_next_sibling(const Pid& p, const Pid& q);
bool is_elder_sibling(const Pid& p, const Pid& q);
bool related(PidRelation rel, const Pid& p, const Pid& q);

// Hierarchical comparison; same as operator<=>.
inline std::strong_ordering compare_hierarchical(const Pid& p, const Pid& q) {
  return p <=> q;
}

}  // namespace pidsym

template <>
struct std::hash<pidsym::Pid> {
  std::size_t operator()(const pidsym::Pid& p) const noexcept {
    return p.hash();
  }
};

#endif  // PIDSYM_PID_HPP_
