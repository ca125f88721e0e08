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

#ifndef PIDSYM_NET_HPP_
#define PIDSYM_NET_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pidsym/expr.hpp"
#include "pidsym/marking.hpp"

namespace pidsym {

enum class Sort { kPid, kData };

struct PlaceDecl {
  std::string name;
  std::vector<Sort> signature;
  // The generator place always has signature (pid, counter).
  bool generator = false;

  friend bool operator==(const PlaceDecl&, const PlaceDecl&) = default;
};

using Tuple = std::vector<ExprPtr>;

// One arc: a multiset of tuples, in declaration order.
struct Arc {
  std::string place;
  std::vector<Tuple> tuples;
};

struct Transition {
  std::string name;
  ExprPtr guard;  // never null; `true` when the model gives no guard
  std::vector<Arc> inputs;
  std::vector<Arc> outputs;

  const Arc* input(std::string_view place) const;
  const Arc* output(std::string_view place) const;
};

bool operator==(const Arc& a, const Arc& b);
bool operator==(const Transition& a, const Transition& b);

// A coloured net with dynamic process creation. Immutable once built.
class TNet {
 public:
  TNet(std::string name, std::vector<PlaceDecl> places,
       std::vector<Transition> transitions, Marking initial);

  const std::string& name() const { return name_; }
  const std::vector<PlaceDecl>& places() const { return places_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const Marking& initial() const { return initial_; }

  const PlaceDecl* place(std::string_view name) const;
  std::optional<std::size_t> transition_index(std::string_view name) const;
  // Name of the first generator place, or "" when there is none.
  const std::string& generator() const { return generator_; }

  friend bool operator==(const TNet&, const TNet&) = default;

 private:
  std::string name_;
  std::vector<PlaceDecl> places_;
  std::vector<Transition> transitions_;
  Marking initial_;
  std::string generator_;
};

// The t-net requirement a violation breaks. kTyping covers sort, arity and
// scoping errors that no numbered requirement names.
enum class Rule { kReq1, kReq2, kReq3, kReq4, kReq5, kTyping };

const char* rule_name(Rule rule);

struct Violation {
  Rule rule;
  std::string location;
  std::string message;

  std::string to_string() const;
};

// Checks the five t-net requirements plus typing. Empty result iff the net
// is a t-net the rest of the library can handle.
std::vector<Violation> validate(const TNet& net);

// (pid variable, counter variable) pairs of the generator input arc of `t`.
std::vector<std::pair<std::string, std::string>> spawn_variables(
    const TNet& net, const Transition& t);

struct Firing {
  std::size_t transition;
  Binding binding;

  friend bool operator==(const Firing&, const Firing&) = default;
};

// All enabled (transition, binding) pairs: transitions in declaration order,
// bindings ascending by their bound values. Throws GuardTypeError if a guard
// misuses a value at evaluation time.
std::vector<Firing> enabled(const TNet& net, const Marking& m);

bool is_enabled(const TNet& net, const Marking& m, std::size_t transition,
                const Binding& binding);

// Consumes and produces tokens. Throws NotEnabled when (t, binding) is not
// enabled at `m`.
Marking fire(const TNet& net, const Marking& m, std::size_t transition,
             const Binding& binding);

// True when `token` fits the place's signature (and, for the generator, has a
// non-negative counter).
bool well_typed(const PlaceDecl& place, const Token& token);

}  // namespace pidsym

#endif  // PIDSYM_NET_HPP_
