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

#ifndef PIDSYM_EQUIV_HPP_
#define PIDSYM_EQUIV_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "pidsym/marking.hpp"
#include "pidsym/pid_tree.hpp"

namespace pidsym {

// A bijection between two pid sets, kept as a pair of inverse maps.
class PidBijection {
 public:
  PidBijection() = default;

  // Adds a -> b. Returns false (and changes nothing) if a or b is already
  // mapped elsewhere.
  bool insert(const Pid& a, const Pid& b);
  void erase(const Pid& a);

  const std::map<Pid, Pid>& forward() const { return forward_; }
  const std::map<Pid, Pid>& backward() const { return backward_; }
  std::optional<Pid> image(const Pid& a) const;
  std::optional<Pid> preimage(const Pid& b) const;
  std::size_t size() const { return forward_.size(); }
  bool empty() const { return forward_.empty(); }

  PidBijection inverse() const;
  std::string to_string() const;

  friend bool operator==(const PidBijection&, const PidBijection&) = default;

 private:
  std::map<Pid, Pid> forward_;
  std::map<Pid, Pid> backward_;
};

// Equivalence of sibling-ordered pid-trees. Locations with equal relative
// paths must correspond one to one; markings must agree once pids are
// renamed along that correspondence; each pair of matching fragments must
// both have length one or both be longer; adjacent siblings must share a
// prefix on both sides or on neither, and when they do, their last
// components must both differ by one or both by more.
//
// Returns the correspondence (the root excluded) on success. Throws
// NotSiblingOrdered if an input is not sibling ordered, and UnanchoredPid if
// a token holds a pid that is not a location of its tree.
std::optional<PidBijection> tree_equivalent(const PidTree& t1,
                                            const PidTree& t2);

// Canonical bytes of a sibling-ordered tree: equal for two trees exactly
// when tree_equivalent accepts them.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::size_t size() const { return bytes_.size(); }
  // Lowercase hex.
  std::string hex() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::string bytes_;
};

// Throws NotSiblingOrdered and UnanchoredPid like tree_equivalent.
Signature signature(const PidTree& t);

enum class KeyForm { kExpanded, kStripped };

// signature of represent(m) or of its stripped form.
Signature state_key(const Marking& m, std::string_view generator,
                    KeyForm form);

}  // namespace pidsym

template <>
struct std::hash<pidsym::Signature> {
  std::size_t operator()(const pidsym::Signature& s) const noexcept {
    return std::hash<std::string>()(s.bytes());
  }
};

#endif  // PIDSYM_EQUIV_HPP_
