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

#include "pidsym/pid.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace pidsym {

Pid::Pid(std::initializer_list<Part> parts)
    : Pid(std::vector<Part>(parts)) {}

Pid::Pid(std::vector<Part> parts) : parts_(std::move(parts)), hash_(0) {
  for (Part p : parts_) {
    if (p == 0) throw std::invalid_argument("pid components must be >= 1");
  }
  hash_ = compute_hash(parts_);
}

std::size_t Pid::compute_hash(std::span<const Part> parts) {
  // FNV-1a over the components, then a final avalanche.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Part p : parts) {
    for (int shift = 0; shift < 32; shift += 8) {
      h ^= (p >> shift) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  h ^= parts.size();
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

Pid Pid::parse(std::string_view text) {
  if (text == "()") return Pid();
  std::vector<Part> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t dot = text.find('.', pos);
    std::string_view piece = text.substr(pos, dot - pos);
    Part value = 0;
    auto [end, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() ||
        end != piece.data() + piece.size() || value == 0) {
      throw std::invalid_argument("malformed pid '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return Pid(std::move(parts));
}

Pid Pid::prefix() const {
  if (parts_.size() <= 1) return Pid();
  return head(parts_.size() - 1);
}

Pid Pid::child(Part k) const {
  std::vector<Part> parts = parts_;
  parts.push_back(k);
  return Pid(std::move(parts));
}

Pid Pid::head(std::size_t n) const {
  n = std::min(n, parts_.size());
  return Pid(std::vector<Part>(parts_.begin(), parts_.begin() + n));
}

Pid Pid::tail(std::size_t n) const {
  n = std::min(n, parts_.size());
  return Pid(std::vector<Part>(parts_.begin() + n, parts_.end()));
}

bool Pid::is_prefix_of(const Pid& other) const {
  return parts_.size() <= other.parts_.size() &&
         std::equal(parts_.begin(), parts_.end(), other.parts_.begin());
}

std::string Pid::to_string() const {
  if (parts_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Pid& a, const Pid& b) {
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
}

std::ostream& operator<<(std::ostream& os, const Pid& pid) {
  return os << pid.to_string();
}

Pid concat(const Pid& a, const Pid& b) {
  std::vector<Pid::Part> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Pid(std::move(parts));
}

std::set<Pid> subpids(const Pid& p) {
  std::set<Pid> out;
  for (std::size_t n = 1; n <= p.length(); ++n) out.insert(p.head(n));
  return out;
}

bool is_child(const Pid& p, const Pid& q) {
  return q.length() == p.length() + 1 && p.is_prefix_of(q);
}

bool is_ancestor(const Pid& p, const Pid& q) {
  return p.length() < q.length() && p.is_prefix_of(q);
}

namespace {

bool same_nonempty_prefix(const Pid& p, const Pid& q) {
  if (p.length() < 2 || p.length() != q.length()) return false;
  return std::equal(p.parts().begin(), p.parts().end() - 1, q.parts().begin());
}

}  // namespace

bool is_next_sibling(const Pid& p, const Pid& q) {
  return same_nonempty_prefix(p, q) && q.last() == p.last() + 1;
}

bool is_elder_sibling(const Pid& p, const Pid& q) {
  return same_nonempty_prefix(p, q) && p.last() < q.last();
}

bool related(PidRelation rel, const Pid& p, const Pid& q) {
  switch (rel) {
    case PidRelation::kEqual:
      return p == q;
    case PidRelation::kChild:
      return is_child(p, q);
    case PidRelation::kAncestor:
      return is_ancestor(p, q);
    case PidRelation::kNextSibling:
      return is_next_sibling(p, q);
    case PidRelation::kElderSibling:
      return is_elder_sibling(p, q);
  }
  return false;
}

}  // namespace pidsym
