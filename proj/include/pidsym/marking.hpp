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

#ifndef PIDSYM_MARKING_HPP_
#define PIDSYM_MARKING_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pidsym/pid.hpp"

namespace pidsym {

struct Symbol {
  std::string name;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// A token component: an integer, a symbol, or a pid. The variant order gives
// the fixed token order: integers < symbols < pids, integers numerically,
// symbols lexicographically, pids hierarchically.
class Value {
 public:
  Value() : v_(std::int64_t{0}) {}
  Value(std::int64_t i) : v_(i) {}  // NOLINT(google-explicit-constructor)
  Value(int i) : v_(std::int64_t{i}) {}  // NOLINT
  Value(Symbol s) : v_(std::move(s)) {}  // NOLINT
  Value(Pid p) : v_(std::move(p)) {}  // NOLINT

  bool is_int() const { return v_.index() == 0; }
  bool is_symbol() const { return v_.index() == 1; }
  bool is_pid() const { return v_.index() == 2; }
  bool is_data() const { return !is_pid(); }

  std::int64_t as_int() const { return std::get<0>(v_); }
  const Symbol& as_symbol() const { return std::get<1>(v_); }
  const Pid& as_pid() const { return std::get<2>(v_); }

  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (auto c = a.v_.index() <=> b.v_.index(); c != 0) return c;
    switch (a.v_.index()) {
      case 0:
        return std::get<0>(a.v_) <=> std::get<0>(b.v_);
      case 1:
        return std::get<1>(a.v_) <=> std::get<1>(b.v_);
      default:
        return std::get<2>(a.v_) <=> std::get<2>(b.v_);
    }
  }

 private:
  std::variant<std::int64_t, Symbol, Pid> v_;
};

using Token = std::vector<Value>;

std::string to_string(const Token& token);
// Replaces every pid component through `f`.
Token map_pids(const Token& token, const std::function<Pid(const Pid&)>& f);

// A finite multiset kept in ascending element order. Zero counts are never
// stored, so structural equality is multiset equality.
template <typename T>
class Multiset {
 public:
  using Map = std::map<T, std::size_t>;
  using const_iterator = typename Map::const_iterator;

  Multiset() = default;
  Multiset(std::initializer_list<T> items) {
    for (const T& t : items) add(t);
  }

  void add(const T& item, std::size_t n = 1) {
    if (n > 0) counts_[item] += n;
  }
  // Returns false, leaving the multiset unchanged, if fewer than `n` copies
  // are present.
  bool remove(const T& item, std::size_t n = 1) {
    auto it = counts_.find(item);
    if (it == counts_.end() || it->second < n) return false;
    it->second -= n;
    if (it->second == 0) counts_.erase(it);
    return true;
  }
  std::size_t count(const T& item) const {
    auto it = counts_.find(item);
    return it == counts_.end() ? 0 : it->second;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [_, c] : counts_) n += c;
    return n;
  }
  std::size_t distinct() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  // Per-element multiplicity inclusion.
  bool included_in(const Multiset& other) const {
    for (const auto& [item, c] : counts_) {
      if (other.count(item) < c) return false;
    }
    return true;
  }
  void merge(const Multiset& other) {
    for (const auto& [item, c] : other.counts_) counts_[item] += c;
  }

  const_iterator begin() const { return counts_.begin(); }
  const_iterator end() const { return counts_.end(); }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset& a, const Multiset& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  Map counts_;
};

using TokenBag = Multiset<Token>;

// Place name -> multiset of tokens. Places holding no token are not stored.
class Marking {
 public:
  using PlaceMap = std::map<std::string, TokenBag, std::less<>>;

  Marking() = default;

  void add(std::string_view place, const Token& token, std::size_t n = 1);
  // Returns false (and leaves the marking unchanged) when not enough copies.
  bool remove(std::string_view place, const Token& token, std::size_t n = 1);
  void add_all(std::string_view place, const TokenBag& bag);
  void merge(const Marking& other);

  std::size_t count(std::string_view place, const Token& token) const;
  // Empty bag for places without tokens.
  const TokenBag& tokens(std::string_view place) const;
  const PlaceMap& places() const { return places_; }
  bool empty() const { return places_.empty(); }
  std::size_t size() const;

  // Per place, per token multiplicity inclusion.
  bool included_in(const Marking& other) const;
  Marking without(std::string_view place) const;
  Marking only(std::string_view place) const;
  Marking map_pids(const std::function<Pid(const Pid&)>& f) const;

  std::string to_string() const;

  friend bool operator==(const Marking&, const Marking&) = default;
  friend auto operator<=>(const Marking& a, const Marking& b) {
    return a.places_ <=> b.places_;
  }

 private:
  PlaceMap places_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);
std::ostream& operator<<(std::ostream& os, const Marking& m);

// Deterministic, injective byte encoding of a marking with concrete pids.
std::string encode_marking(const Marking& m);

}  // namespace pidsym

#endif  // PIDSYM_MARKING_HPP_
