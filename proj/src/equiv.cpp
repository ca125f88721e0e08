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

#include "pidsym/equiv.hpp"

#include <set>
#include <vector>

#include "byte_writer.hpp"
#include "pidsym/errors.hpp"
#include "pidsym/repr.hpp"

namespace pidsym {

bool PidBijection::insert(const Pid& a, const Pid& b) {
  auto f = forward_.find(a);
  auto r = backward_.find(b);
  if (f != forward_.end() || r != backward_.end()) {
    return f != forward_.end() && f->second == b;
  }
  forward_.emplace(a, b);
  backward_.emplace(b, a);
  return true;
}

void PidBijection::erase(const Pid& a) {
  auto f = forward_.find(a);
  if (f == forward_.end()) return;
  backward_.erase(f->second);
  forward_.erase(f);
}

std::optional<Pid> PidBijection::image(const Pid& a) const {
  auto it = forward_.find(a);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::optional<Pid> PidBijection::preimage(const Pid& b) const {
  auto it = backward_.find(b);
  if (it == backward_.end()) return std::nullopt;
  return it->second;
}

PidBijection PidBijection::inverse() const {
  PidBijection out;
  out.forward_ = backward_;
  out.backward_ = forward_;
  return out;
}

std::string PidBijection::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : forward_) {
    if (!first) out += ", ";
    first = false;
    out += a.to_string() + " -> " + b.to_string();
  }
  return out + "}";
}

namespace {

enum : std::uint8_t { kOne = 1, kMany = 2 };

std::uint8_t length_class(const Pid& fragment) {
  return fragment.length() == 1 ? kOne : kMany;
}

bool same_prefix(const Pid& a, const Pid& b) { return a.prefix() == b.prefix(); }

// Offset class of adjacent siblings sharing a prefix.
std::uint8_t offset_class(const Pid& a, const Pid& b) {
  return b.last() - a.last() == 1 ? kOne : kMany;
}

void require_ordered(const PidTree& t) {
  if (!is_sibling_ordered(t)) {
    throw NotSiblingOrdered("tree is not sibling ordered: " + t.to_string());
  }
}

// Throws UnanchoredPid unless every token pid is a non-root location.
void require_anchored(const PidTree& t) {
  std::set<Pid> locations = pids(t);
  for (const Subtree& s : subtrees(t)) {
    for (const auto& [place, bag] : s.tree->marking().places()) {
      for (const auto& [token, _] : bag) {
        for (const Value& v : token) {
          if (v.is_pid() &&
              (v.as_pid().empty() || !locations.contains(v.as_pid()))) {
            throw UnanchoredPid("pid " + v.as_pid().to_string() +
                                " in a token is not a location of the tree");
          }
        }
      }
    }
  }
}

struct NodePair {
  const PidTree* a;
  const PidTree* b;
};

bool match_shape(const PidTree& t1, const Pid& at1, const PidTree& t2,
                 const Pid& at2, PidBijection& h,
                 std::vector<NodePair>& pairs) {
  if (t1.arity() != t2.arity()) return false;
  pairs.push_back({&t1, &t2});
  const auto& c1 = t1.children();
  const auto& c2 = t2.children();
  for (std::size_t i = 0; i < c1.size(); ++i) {
    const Pid& a = c1[i].fragment;
    const Pid& b = c2[i].fragment;
    if (length_class(a) != length_class(b)) return false;
    if (i > 0) {
      const Pid& pa = c1[i - 1].fragment;
      const Pid& pb = c2[i - 1].fragment;
      bool sa = same_prefix(pa, a);
      if (sa != same_prefix(pb, b)) return false;
      if (sa && offset_class(pa, a) != offset_class(pb, b)) return false;
    }
    Pid loc1 = concat(at1, a);
    Pid loc2 = concat(at2, b);
    h.insert(loc1, loc2);
    if (!match_shape(c1[i].tree, loc1, c2[i].tree, loc2, h, pairs)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<PidBijection> tree_equivalent(const PidTree& t1,
                                            const PidTree& t2) {
  require_ordered(t1);
  require_ordered(t2);
  require_anchored(t1);
  require_anchored(t2);
  PidBijection h;
  std::vector<NodePair> pairs;
  if (!match_shape(t1, Pid(), t2, Pid(), h, pairs)) return std::nullopt;
  auto rename = [&h](const Pid& pi) { return *h.image(pi); };
  for (const NodePair& p : pairs) {
    if (p.a->marking().map_pids(rename) != p.b->marking()) return std::nullopt;
  }
  return h;
}

std::string Signature::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (char c : bytes_) {
    auto u = static_cast<unsigned char>(c);
    out += digits[u >> 4];
    out += digits[u & 0xf];
  }
  return out;
}

namespace {

class Encoder {
 public:
  explicit Encoder(const PidTree& root) : paths_(relpaths(root)) {}

  std::string node(const PidTree& t) const {
    internal::ByteWriter w;
    marking(t.marking(), w);
    const auto& c = t.children();
    w.u32(static_cast<std::uint32_t>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Pid& a = c[i].fragment;
      w.u8(length_class(a));
      if (i > 0) {
        const Pid& prev = c[i - 1].fragment;
        bool same = same_prefix(prev, a);
        w.u8(same ? 1 : 0);
        if (same) w.u8(offset_class(prev, a));
      }
      w.bytes(node(c[i].tree));
    }
    return w.take();
  }

 private:
  void marking(const Marking& m, internal::ByteWriter& w) const {
    w.u32(static_cast<std::uint32_t>(m.places().size()));
    for (const auto& [place, bag] : m.places()) {
      w.bytes(place);
      std::map<std::string, std::size_t> tokens;
      for (const auto& [token, count] : bag) tokens[abstract(token)] += count;
      w.u32(static_cast<std::uint32_t>(tokens.size()));
      for (const auto& [bytes, count] : tokens) {
        w.bytes(bytes);
        w.u64(count);
      }
    }
  }

  std::string abstract(const Token& token) const {
    internal::ByteWriter w;
    w.u32(static_cast<std::uint32_t>(token.size()));
    for (const Value& v : token) {
      if (v.is_int()) {
        w.u8(0);
        w.i64(v.as_int());
      } else if (v.is_symbol()) {
        w.u8(1);
        w.bytes(v.as_symbol().name);
      } else {
        auto it = paths_.find(v.as_pid());
        if (it == paths_.end()) {
          throw UnanchoredPid("pid " + v.as_pid().to_string() +
                              " in a token is not a location of the tree");
        }
        w.u8(2);
        w.u32(static_cast<std::uint32_t>(it->second.size()));
        for (std::size_t k : it->second) w.u32(static_cast<std::uint32_t>(k));
      }
    }
    return w.take();
  }

  std::map<Pid, RelPath> paths_;
};

}  // namespace

Signature signature(const PidTree& t) {
  require_ordered(t);
  return Signature(Encoder(t).node(t));
}

Signature state_key(const Marking& m, std::string_view generator,
                    KeyForm form) {
  if (form == KeyForm::kStripped) return signature(stripped_form(m, generator));
  return signature(represent(m, generator));
}

}  // namespace pidsym
