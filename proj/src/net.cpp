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

#include "pidsym/net.hpp"

#include <algorithm>
#include <set>

#include "pidsym/errors.hpp"

namespace pidsym {

const Arc* Transition::input(std::string_view place) const {
  for (const Arc& a : inputs) {
    if (a.place == place) return &a;
  }
  return nullptr;
}

const Arc* Transition::output(std::string_view place) const {
  for (const Arc& a : outputs) {
    if (a.place == place) return &a;
  }
  return nullptr;
}

namespace {

bool same_tuple(const Tuple& a, const Tuple& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), same_expr);
}

}  // namespace

bool operator==(const Arc& a, const Arc& b) {
  return a.place == b.place &&
         std::equal(a.tuples.begin(), a.tuples.end(), b.tuples.begin(),
                    b.tuples.end(), same_tuple);
}

bool operator==(const Transition& a, const Transition& b) {
  return a.name == b.name && same_expr(a.guard, b.guard) &&
         a.inputs == b.inputs && a.outputs == b.outputs;
}

TNet::TNet(std::string name, std::vector<PlaceDecl> places,
           std::vector<Transition> transitions, Marking initial)
    : name_(std::move(name)),
      places_(std::move(places)),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)) {
  for (const PlaceDecl& p : places_) {
    if (p.generator) {
      generator_ = p.name;
      break;
    }
  }
  for (Transition& t : transitions_) {
    if (!t.guard) t.guard = make_bool(true);
  }
}

const PlaceDecl* TNet::place(std::string_view name) const {
  for (const PlaceDecl& p : places_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::optional<std::size_t> TNet::transition_index(std::string_view name) const {
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    if (transitions_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> spawn_variables(
    const TNet& net, const Transition& t) {
  std::vector<std::pair<std::string, std::string>> out;
  const Arc* arc = t.input(net.generator());
  if (arc == nullptr) return out;
  for (const Tuple& tuple : arc->tuples) {
    if (tuple.size() != 2) continue;
    const auto* p = tuple[0]->as<Expr::Var>();
    const auto* c = tuple[1]->as<Expr::Var>();
    if (p && c) out.emplace_back(p->name, c->name);
  }
  return out;
}

bool well_typed(const PlaceDecl& place, const Token& token) {
  if (token.size() != place.signature.size()) return false;
  for (std::size_t i = 0; i < token.size(); ++i) {
    bool want_pid = place.signature[i] == Sort::kPid;
    if (token[i].is_pid() != want_pid) return false;
  }
  if (place.generator) {
    return token[0].as_pid().length() > 0 && token[1].is_int() &&
           token[1].as_int() >= 0;
  }
  return true;
}

namespace {

struct PatternRef {
  const std::string* place;
  const Tuple* tuple;
};

std::vector<PatternRef> flatten_inputs(const Transition& t) {
  std::vector<PatternRef> out;
  for (const Arc& arc : t.inputs) {
    for (const Tuple& tuple : arc.tuples) out.push_back({&arc.place, &tuple});
  }
  return out;
}

Token eval_tuple(const Tuple& tuple, const Binding& b) {
  Token token;
  token.reserve(tuple.size());
  for (const ExprPtr& e : tuple) token.push_back(evaluate_value(*e, b));
  return token;
}

// Produced tokens, or nullopt when some output is ill-typed.
std::optional<Marking> produce(const TNet& net, const Transition& t,
                               const Binding& b) {
  Marking out;
  for (const Arc& arc : t.outputs) {
    const PlaceDecl* decl = net.place(arc.place);
    for (const Tuple& tuple : arc.tuples) {
      Token token;
      try {
        token = eval_tuple(tuple, b);
      } catch (const GuardTypeError&) {
        return std::nullopt;
      }
      if (decl == nullptr || !well_typed(*decl, token)) return std::nullopt;
      out.add(arc.place, token);
    }
  }
  return out;
}

class BindingSearch {
 public:
  BindingSearch(const TNet& net, const Transition& t, const Marking& m)
      : net_(net), t_(t), m_(m), patterns_(flatten_inputs(t)) {}

  std::set<Binding> run() {
    Binding b;
    search(0, b);
    return std::move(found_);
  }

 private:
  std::size_t used(const std::string& place, const Token& token) const {
    std::size_t n = 0;
    for (const auto& [p, tok] : used_) {
      if (*p == place && *tok == token) ++n;
    }
    return n;
  }

  void search(std::size_t i, Binding& b) {
    if (i == patterns_.size()) {
      if (!evaluate_bool(*t_.guard, b)) return;
      if (!produce(net_, t_, b)) return;
      found_.insert(b);
      return;
    }
    const PatternRef& pat = patterns_[i];
    for (const auto& [token, count] : m_.tokens(*pat.place)) {
      if (token.size() != pat.tuple->size()) continue;
      if (used(*pat.place, token) >= count) continue;
      std::vector<std::string> bound_here;
      bool ok = true;
      for (std::size_t k = 0; k < token.size() && ok; ++k) {
        const Expr& e = *(*pat.tuple)[k];
        if (const auto* var = e.as<Expr::Var>()) {
          auto it = b.find(var->name);
          if (it == b.end()) {
            b.emplace(var->name, token[k]);
            bound_here.push_back(var->name);
          } else {
            ok = it->second == token[k];
          }
        } else if (const auto* lit = e.as<Expr::Literal>()) {
          ok = lit->value == token[k];
        } else {
          ok = false;
        }
      }
      if (ok) {
        used_.emplace_back(pat.place, &token);
        search(i + 1, b);
        used_.pop_back();
      }
      for (const std::string& name : bound_here) b.erase(name);
    }
  }

  const TNet& net_;
  const Transition& t_;
  const Marking& m_;
  std::vector<PatternRef> patterns_;
  std::vector<std::pair<const std::string*, const Token*>> used_;
  std::set<Binding> found_;
};

std::set<std::string> input_variables(const Transition& t) {
  std::set<std::string> vars;
  for (const Arc& arc : t.inputs) {
    for (const Tuple& tuple : arc.tuples) {
      for (const ExprPtr& e : tuple) {
        if (const auto* v = e->as<Expr::Var>()) vars.insert(v->name);
      }
    }
  }
  return vars;
}

// The successor marking, or nullopt when (t, b) is not enabled.
std::optional<Marking> try_fire(const TNet& net, const Marking& m,
                                std::size_t transition, const Binding& b) {
  if (transition >= net.transitions().size()) return std::nullopt;
  const Transition& t = net.transitions()[transition];
  std::set<std::string> vars = input_variables(t);
  if (vars.size() != b.size()) return std::nullopt;
  for (const auto& [name, _] : b) {
    if (!vars.contains(name)) return std::nullopt;
  }
  Marking next = m;
  try {
    for (const Arc& arc : t.inputs) {
      for (const Tuple& tuple : arc.tuples) {
        if (!next.remove(arc.place, eval_tuple(tuple, b))) return std::nullopt;
      }
    }
  } catch (const GuardTypeError&) {
    return std::nullopt;
  }
  if (!evaluate_bool(*t.guard, b)) return std::nullopt;
  std::optional<Marking> produced = produce(net, t, b);
  if (!produced) return std::nullopt;
  next.merge(*produced);
  return next;
}

}  // namespace

std::vector<Firing> enabled(const TNet& net, const Marking& m) {
  std::vector<Firing> out;
  for (std::size_t i = 0; i < net.transitions().size(); ++i) {
    BindingSearch search(net, net.transitions()[i], m);
    for (const Binding& b : search.run()) out.push_back({i, b});
  }
  return out;
}

bool is_enabled(const TNet& net, const Marking& m, std::size_t transition,
                const Binding& binding) {
  return try_fire(net, m, transition, binding).has_value();
}

Marking fire(const TNet& net, const Marking& m, std::size_t transition,
             const Binding& binding) {
  std::optional<Marking> next = try_fire(net, m, transition, binding);
  if (!next) {
    std::string name = transition < net.transitions().size()
                           ? net.transitions()[transition].name
                           : std::to_string(transition);
    throw NotEnabled("transition '" + name + "' is not enabled");
  }
  return *std::move(next);
}

}  // namespace pidsym
