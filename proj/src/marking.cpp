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

#include "pidsym/marking.hpp"

#include <ostream>

#include "byte_writer.hpp"

namespace pidsym {

std::string Value::to_string() const {
  if (is_int()) return std::to_string(as_int());
  if (is_symbol()) return "\"" + as_symbol().name + "\"";
  return as_pid().to_string();
}

std::string to_string(const Token& token) {
  std::string out = "(";
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (i > 0) out += ", ";
    out += token[i].to_string();
  }
  return out + ")";
}

Token map_pids(const Token& token, const std::function<Pid(const Pid&)>& f) {
  Token out;
  out.reserve(token.size());
  for (const Value& v : token) {
    out.push_back(v.is_pid() ? Value(f(v.as_pid())) : v);
  }
  return out;
}

void Marking::add(std::string_view place, const Token& token, std::size_t n) {
  if (n == 0) return;
  auto it = places_.find(place);
  if (it == places_.end()) {
    it = places_.emplace(std::string(place), TokenBag{}).first;
  }
  it->second.add(token, n);
}

bool Marking::remove(std::string_view place, const Token& token,
                     std::size_t n) {
  auto it = places_.find(place);
  if (it == places_.end()) return n == 0;
  if (!it->second.remove(token, n)) return false;
  if (it->second.empty()) places_.erase(it);
  return true;
}

void Marking::add_all(std::string_view place, const TokenBag& bag) {
  for (const auto& [token, n] : bag) add(place, token, n);
}

void Marking::merge(const Marking& other) {
  for (const auto& [place, bag] : other.places_) add_all(place, bag);
}

std::size_t Marking::count(std::string_view place, const Token& token) const {
  auto it = places_.find(place);
  return it == places_.end() ? 0 : it->second.count(token);
}

const TokenBag& Marking::tokens(std::string_view place) const {
  static const TokenBag kEmpty;
  auto it = places_.find(place);
  return it == places_.end() ? kEmpty : it->second;
}

std::size_t Marking::size() const {
  std::size_t n = 0;
  for (const auto& [_, bag] : places_) n += bag.size();
  return n;
}

bool Marking::included_in(const Marking& other) const {
  for (const auto& [place, bag] : places_) {
    if (!bag.included_in(other.tokens(place))) return false;
  }
  return true;
}

Marking Marking::without(std::string_view place) const {
  Marking out = *this;
  if (auto it = out.places_.find(place); it != out.places_.end()) {
    out.places_.erase(it);
  }
  return out;
}

Marking Marking::only(std::string_view place) const {
  Marking out;
  out.add_all(place, tokens(place));
  return out;
}

Marking Marking::map_pids(const std::function<Pid(const Pid&)>& f) const {
  Marking out;
  for (const auto& [place, bag] : places_) {
    for (const auto& [token, n] : bag) {
      out.add(place, pidsym::map_pids(token, f), n);
    }
  }
  return out;
}

std::string Marking::to_string() const {
  std::string out = "{";
  bool first_place = true;
  for (const auto& [place, bag] : places_) {
    if (!first_place) out += ", ";
    first_place = false;
    out += place + " -> {";
    bool first = true;
    for (const auto& [token, n] : bag) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!first) out += "; ";
        first = false;
        out += pidsym::to_string(token);
      }
    }
    out += "}";
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
  return os << v.to_string();
}

std::ostream& operator<<(std::ostream& os, const Marking& m) {
  return os << m.to_string();
}

std::string encode_marking(const Marking& m) {
  internal::ByteWriter w;
  w.u32(static_cast<std::uint32_t>(m.places().size()));
  for (const auto& [place, bag] : m.places()) {
    w.bytes(place);
    w.u32(static_cast<std::uint32_t>(bag.distinct()));
    for (const auto& [token, n] : bag) {
      w.u64(n);
      w.u32(static_cast<std::uint32_t>(token.size()));
      for (const Value& v : token) {
        if (v.is_int()) {
          w.u8(0);
          w.i64(v.as_int());
        } else if (v.is_symbol()) {
          w.u8(1);
          w.bytes(v.as_symbol().name);
        } else {
          w.u8(2);
          w.u32(static_cast<std::uint32_t>(v.as_pid().length()));
          for (auto part : v.as_pid().parts()) w.u32(part);
        }
      }
    }
  }
  return w.take();
}

}  // namespace pidsym
