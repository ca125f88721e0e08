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

#include "pidsym/pid_tree.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "pidsym/errors.hpp"

namespace pidsym {

namespace {

bool siblings_wf(const std::vector<PidTree::Edge>& children) {
  for (std::size_t i = 0; i < children.size(); ++i) {
    const Pid& a = children[i].fragment;
    if (a.empty()) return false;
    for (std::size_t j = i + 1; j < children.size(); ++j) {
      const Pid& b = children[j].fragment;
      if (a.is_prefix_of(b) || b.is_prefix_of(a)) return false;
    }
  }
  return true;
}

bool fragment_less(const PidTree::Edge& a, const PidTree::Edge& b) {
  return a.fragment < b.fragment;
}

}  // namespace

PidTree::PidTree(Marking marking, std::vector<Edge> children)
    : marking_(std::move(marking)), children_(std::move(children)) {
  if (!siblings_wf(children_)) {
    throw IllFormedTree("sibling fragments overlap in " + to_string());
  }
  std::sort(children_.begin(), children_.end(), fragment_less);
}

PidTree PidTree::raw(Marking marking, std::vector<Edge> children) {
  PidTree t(std::move(marking));
  t.children_ = std::move(children);
  return t;
}

std::size_t PidTree::node_count() const {
  std::size_t n = 1;
  for (const Edge& e : children_) n += e.tree.node_count();
  return n;
}

const PidTree* PidTree::find(const Pid& pi) const {
  if (pi.empty()) return this;
  for (const Edge& e : children_) {
    if (e.fragment.is_prefix_of(pi)) {
      return e.tree.find(pi.tail(e.fragment.length()));
    }
  }
  return nullptr;
}

std::string PidTree::to_string() const {
  std::string out = marking_.to_string();
  if (children_.empty()) return out;
  out += " [";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i > 0) out += "; ";
    out += children_[i].fragment.to_string() + ": " +
           children_[i].tree.to_string();
  }
  return out + "]";
}

bool operator==(const PidTree& a, const PidTree& b) {
  return a.marking_ == b.marking_ && a.children_ == b.children_;
}

std::ostream& operator<<(std::ostream& os, const PidTree& t) {
  return os << t.to_string();
}

bool check_wf(const PidTree& t) {
  if (!siblings_wf(t.children())) return false;
  return std::all_of(t.children().begin(), t.children().end(),
                     [](const PidTree::Edge& e) { return check_wf(e.tree); });
}

bool is_sibling_ordered(const PidTree& t) {
  const auto& c = t.children();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (!(c[i - 1].fragment < c[i].fragment)) return false;
  }
  return std::all_of(c.begin(), c.end(), [](const PidTree::Edge& e) {
    return is_sibling_ordered(e.tree);
  });
}

bool includes(const PidTree& sub, const PidTree& sup) {
  if (!sub.marking().included_in(sup.marking())) return false;
  for (const PidTree::Edge& e : sub.children()) {
    auto it = std::find_if(
        sup.children().begin(), sup.children().end(),
        [&](const PidTree::Edge& f) { return f.fragment == e.fragment; });
    if (it == sup.children().end() || !includes(e.tree, it->tree)) {
      return false;
    }
  }
  return true;
}

namespace {

void collect(const PidTree& t, const Pid& at, std::vector<Subtree>& out) {
  out.push_back({at, &t});
  for (const PidTree::Edge& e : t.children()) {
    collect(e.tree, concat(at, e.fragment), out);
  }
}

void collect_relpaths(const PidTree& t, const Pid& at, RelPath& prefix,
                      std::map<Pid, RelPath>& out) {
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    const PidTree::Edge& e = t.children()[i];
    Pid here = concat(at, e.fragment);
    prefix.push_back(i + 1);
    out.emplace(here, prefix);
    collect_relpaths(e.tree, here, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Subtree> subtrees(const PidTree& t) {
  std::vector<Subtree> out;
  collect(t, Pid(), out);
  return out;
}

std::set<Pid> pids(const PidTree& t) {
  std::set<Pid> out;
  for (const Subtree& s : subtrees(t)) out.insert(s.at);
  return out;
}

PidTree mk_path(const Pid& pi, const Marking& m, Granularity g) {
  if (pi.empty()) throw EmptyPid("a path needs a non-empty pid");
  if (g == Granularity::kSingleEdge) {
    return PidTree(Marking(), {{pi, PidTree(m)}});
  }
  PidTree t(m);
  for (std::size_t i = pi.length(); i-- > 0;) {
    t = PidTree(Marking(), {{Pid{pi[i]}, std::move(t)}});
  }
  return t;
}

RelPath relpath(const Pid& pi, const PidTree& t) {
  if (pi.empty()) throw NotInTree("() has no relative path");
  RelPath out;
  const PidTree* node = &t;
  Pid rest = pi;
  while (!rest.empty()) {
    const auto& c = node->children();
    std::size_t i = 0;
    while (i < c.size() && !c[i].fragment.is_prefix_of(rest)) ++i;
    if (i == c.size()) {
      throw NotInTree(pi.to_string() + " is not a location of the tree");
    }
    out.push_back(i + 1);
    rest = rest.tail(c[i].fragment.length());
    node = &c[i].tree;
  }
  return out;
}

std::map<Pid, RelPath> relpaths(const PidTree& t) {
  std::map<Pid, RelPath> out;
  RelPath prefix;
  collect_relpaths(t, Pid(), prefix, out);
  return out;
}

std::string to_string(const RelPath& path) {
  std::string out = "<";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(path[i]);
  }
  return out + ">";
}

PidTree order_by(const PidTree& t, const EdgeOrder& less) {
  std::vector<PidTree::Edge> children;
  children.reserve(t.arity());
  for (const PidTree::Edge& e : t.children()) {
    children.push_back({e.fragment, order_by(e.tree, less)});
  }
  std::stable_sort(children.begin(), children.end(), less);
  return PidTree::raw(t.marking(), std::move(children));
}

PidTree sibling_order(const PidTree& t) { return order_by(t, fragment_less); }

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dot_marking(const Marking& m) {
  if (m.empty()) return "";
  std::string out;
  for (const auto& [place, bag] : m.places()) {
    if (!out.empty()) out += "\\n";
    std::string tokens;
    for (const auto& [token, n] : bag) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!tokens.empty()) tokens += ", ";
        tokens += to_string(token);
      }
    }
    out += dot_escape(place + ": " + tokens);
  }
  return out;
}

void dot_node(const PidTree& t, std::size_t& next_id, std::ostream& os) {
  std::size_t id = next_id++;
  os << "  n" << id << " [label=\"" << dot_marking(t.marking()) << "\"];\n";
  for (const PidTree::Edge& e : t.children()) {
    std::size_t child = next_id;
    dot_node(e.tree, next_id, os);
    os << "  n" << id << " -> n" << child << " [label=\""
       << e.fragment.to_string() << "\"];\n";
  }
}

}  // namespace

std::string to_dot(const PidTree& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n"
     << "  node [shape=box, fontname=monospace];\n";
  std::size_t next_id = 0;
  dot_node(t, next_id, os);
  os << "}\n";
  return os.str();
}

}  // namespace pidsym
