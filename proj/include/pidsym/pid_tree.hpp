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

#ifndef PIDSYM_PID_TREE_HPP_
#define PIDSYM_PID_TREE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pidsym/marking.hpp"
#include "pidsym/pid.hpp"

namespace pidsym {

// A tree of markings whose edges carry pid fragments. The node reached by
// fragments a1, ..., an holds the tokens owned by the pid a1.a2...an.
class PidTree {
 public:
  struct Edge;

  PidTree() = default;
  explicit PidTree(Marking marking) : marking_(std::move(marking)) {}
  // Checks well-formedness (throws IllFormedTree) and sorts the children
  // into sibling order.
  PidTree(Marking marking, std::vector<Edge> children);

  // No checks and no sorting; for building deliberately bad inputs.
  static PidTree raw(Marking marking, std::vector<Edge> children);

  const Marking& marking() const { return marking_; }
  const std::vector<Edge>& children() const { return children_; }
  std::size_t arity() const { return children_.size(); }
  bool is_leaf() const { return children_.empty(); }
  std::size_t node_count() const;

  // The subtree at `pi`, or nullptr.
  const PidTree* find(const Pid& pi) const;

  std::string to_string() const;

  friend bool operator==(const PidTree& a, const PidTree& b);

 private:
  Marking marking_;
  std::vector<Edge> children_;
};

struct PidTree::Edge {
  Pid fragment;
  PidTree tree;

  friend bool operator==(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const PidTree& t);

// Non-empty, pairwise distinct sibling fragments, none a prefix of another;
// recursively.
bool check_wf(const PidTree& t);
// Children strictly ascending in hierarchical order of their fragments;
// recursively.
bool is_sibling_ordered(const PidTree& t);

// sub ⊆ sup: markings included, and each child of `sub` included in the
// child of `sup` with the same fragment. The roots are matched to each other.
bool includes(const PidTree& sub, const PidTree& sup);

struct Subtree {
  Pid at;
  const PidTree* tree;
};

// Every (location, subtree) pair in preorder, root first. The pointers
// refer into `t`.
std::vector<Subtree> subtrees(const PidTree& t);
// Locations of all nodes, () included.
std::set<Pid> pids(const PidTree& t);

enum class Granularity { kExpanded, kSingleEdge };

// A linear tree leading to `pi`, with `m` at its end and every other marking
// empty. Throws EmptyPid for ().
PidTree mk_path(const Pid& pi, const Marking& m, Granularity g);

using RelPath = std::vector<std::size_t>;

// 1-based child positions along the decomposition of `pi` into fragments.
// Throws NotInTree when `pi` is () or not a location of `t`.
RelPath relpath(const Pid& pi, const PidTree& t);
// relpath of every non-root location.
std::map<Pid, RelPath> relpaths(const PidTree& t);

std::string to_string(const RelPath& path);

// Children at every node sorted stably by `less` on (fragment, child).
using EdgeOrder = std::function<bool(const PidTree::Edge&,
                                     const PidTree::Edge&)>;
PidTree order_by(const PidTree& t, const EdgeOrder& less);
// order_by with the hierarchical order of fragments.
PidTree sibling_order(const PidTree& t);

// Graphviz rendering: one node per tree node labelled with its marking, one
// edge per child labelled with the fragment.
std::string to_dot(const PidTree& t, const std::string& name = "pidtree");

}  // namespace pidsym

#endif  // PIDSYM_PID_TREE_HPP_
