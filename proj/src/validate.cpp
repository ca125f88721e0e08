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

#include <map>
#include <optional>
#include <set>
#include <string>

#include "pidsym/net.hpp"

namespace pidsym {

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::kReq1:
      return "Req1";
    case Rule::kReq2:
      return "Req2";
    case Rule::kReq3:
      return "Req3";
    case Rule::kReq4:
      return "Req4";
    case Rule::kReq5:
      return "Req5";
    case Rule::kTyping:
      return "Typing";
  }
  return "?";
}

std::string Violation::to_string() const {
  return std::string(rule_name(rule)) + " at " + location + ": " + message;
}

namespace {

enum class Kind { kPid, kData, kBool };

struct SpawnPair {
  std::string pid;
  std::string counter;
};

// What the generator arcs of one transition declare.
struct SpawnShape {
  std::vector<SpawnPair> pairs;
  std::set<std::string> pid_vars;      // p_1..p_k
  std::set<std::string> counter_vars;  // c_1..c_k
  std::set<std::string> retained;      // p_1..p_m
  // Π_t as (parent variable, offset j) for p.(c+j).
  std::set<std::pair<std::string, std::int64_t>> children;
};

class Validator {
 public:
  explicit Validator(const TNet& net) : net_(net) {}

  std::vector<Violation> run() {
    check_places();
    check_initial();
    for (const Transition& t : net_.transitions()) check_transition(t);
    return std::move(out_);
  }

 private:
  void report(Rule rule, std::string location, std::string message) {
    out_.push_back({rule, std::move(location), std::move(message)});
  }

  void check_places() {
    std::set<std::string> seen;
    int generators = 0;
    for (const PlaceDecl& p : net_.places()) {
      if (!seen.insert(p.name).second) {
        report(Rule::kTyping, "place '" + p.name + "'", "declared twice");
      }
      if (p.signature.empty()) {
        report(Rule::kTyping, "place '" + p.name + "'", "empty signature");
      }
      if (!p.generator) continue;
      ++generators;
      if (p.signature != std::vector<Sort>{Sort::kPid, Sort::kData}) {
        report(Rule::kReq1, "place '" + p.name + "'",
               "generator place must have type pid x counter");
      }
    }
    if (generators != 1) {
      report(Rule::kReq1, "net '" + net_.name() + "'",
             "expected exactly one generator place, found " +
                 std::to_string(generators));
    }
    std::set<std::string> tnames;
    for (const Transition& t : net_.transitions()) {
      if (!tnames.insert(t.name).second) {
        report(Rule::kTyping, "transition '" + t.name + "'", "declared twice");
      }
    }
  }

  void check_initial() {
    const std::string& gen = net_.generator();
    for (const auto& [place, bag] : net_.initial().places()) {
      const PlaceDecl* decl = net_.place(place);
      if (decl == nullptr) {
        report(Rule::kTyping, "initial marking",
               "tokens in undeclared place '" + place + "'");
        continue;
      }
      for (const auto& [token, count] : bag) {
        if (!well_typed(*decl, token)) {
          report(Rule::kTyping, "initial marking",
                 "ill-typed token " + pidsym::to_string(token) + " in '" +
                     place + "'");
        }
        if (place == gen) continue;
        for (const Value& v : token) {
          if (v.is_pid()) {
            report(Rule::kReq2, "initial marking",
                   "place '" + place + "' holds pid " + v.to_string());
            break;
          }
        }
      }
    }
    if (gen.empty()) return;
    const TokenBag& g = net_.initial().tokens(gen);
    Token expected{Value(Pid{1}), Value(0)};
    if (g.size() != 1 || g.count(expected) != 1) {
      report(Rule::kReq2, "initial marking",
             "generator place must hold exactly <1, 0>");
    }
  }

  // --- generator arcs ----------------------------------------------------

  SpawnShape check_generator_arcs(const Transition& t, const std::string& loc) {
    SpawnShape shape;
    const std::string& gen = net_.generator();
    if (gen.empty()) return shape;
    std::set<std::string> names;
    for (const Arc& arc : t.inputs) {
      if (arc.place != gen) continue;
      for (const Tuple& tuple : arc.tuples) {
        const Expr::Var* p = tuple.size() == 2 ? tuple[0]->as<Expr::Var>()
                                               : nullptr;
        const Expr::Var* c = tuple.size() == 2 ? tuple[1]->as<Expr::Var>()
                                               : nullptr;
        if (p == nullptr || c == nullptr) {
          report(Rule::kReq3, loc + ", input " + gen,
                 "generator input tuples must be (pid variable, counter "
                 "variable)");
          continue;
        }
        if (!names.insert(p->name).second || !names.insert(c->name).second) {
          report(Rule::kReq3, loc + ", input " + gen,
                 "generator variables must be pairwise distinct");
          continue;
        }
        shape.pairs.push_back({p->name, c->name});
        shape.pid_vars.insert(p->name);
        shape.counter_vars.insert(c->name);
      }
    }
    std::map<std::string, std::string> counter_of;
    for (const SpawnPair& sp : shape.pairs) counter_of[sp.pid] = sp.counter;

    std::map<std::string, std::int64_t> advance;
    std::map<std::string, std::set<std::int64_t>> spawned;
    for (const Arc& arc : t.outputs) {
      if (arc.place != gen) continue;
      std::string where = loc + ", output " + gen;
      for (const Tuple& tuple : arc.tuples) {
        if (tuple.size() != 2) {
          report(Rule::kReq3, where, "generator tuples have two components");
          continue;
        }
        if (const auto* p = tuple[0]->as<Expr::Var>()) {
          auto it = counter_of.find(p->name);
          std::optional<std::int64_t> n =
              it == counter_of.end() ? std::nullopt
                                     : counter_offset(*tuple[1], it->second);
          if (!n || *n < 0) {
            report(Rule::kReq3, where,
                   "expected (p, c + n) for an input pair (p, c), got " +
                       tuple_string(tuple));
            continue;
          }
          if (!shape.retained.insert(p->name).second) {
            report(Rule::kReq3, where, "'" + p->name + "' retained twice");
            continue;
          }
          advance[p->name] = *n;
        } else if (const auto* pc = tuple[0]->as<Expr::PidChild>()) {
          auto it = counter_of.find(pc->parent);
          std::optional<std::int64_t> j =
              it == counter_of.end() ? std::nullopt
                                     : counter_offset(*pc->index, it->second);
          const auto* zero = tuple[1]->as<Expr::Literal>();
          bool zero_ok = zero != nullptr && zero->value == Value(0);
          if (!j || *j < 1 || !zero_ok) {
            report(Rule::kReq3, where,
                   "expected (p.(c + j), 0) with j >= 1, got " +
                       tuple_string(tuple));
            continue;
          }
          if (!spawned[pc->parent].insert(*j).second) {
            report(Rule::kReq3, where,
                   "child " + pc->parent + ".(" + pc->index->to_string() +
                       ") spawned twice");
            continue;
          }
          shape.children.emplace(pc->parent, *j);
        } else {
          report(Rule::kReq3, where,
                 "unexpected generator tuple " + tuple_string(tuple));
        }
      }
    }
    for (const auto& [p, offsets] : spawned) {
      auto n = static_cast<std::int64_t>(offsets.size());
      if (*offsets.rbegin() != n) {
        report(Rule::kReq3, loc,
               "children of '" + p + "' must be numbered c + 1 .. c + n");
      }
      auto adv = advance.find(p);
      if (adv != advance.end() && adv->second != n) {
        report(Rule::kReq3, loc,
               "counter of '" + p + "' advances by " +
                   std::to_string(adv->second) + " but " + std::to_string(n) +
                   " children are created");
      }
    }
    for (const auto& [p, n] : advance) {
      if (n != 0 && !spawned.contains(p)) {
        report(Rule::kReq3, loc,
               "counter of '" + p + "' advances by " + std::to_string(n) +
                   " but no child is created");
      }
    }
    return shape;
  }

  // n when `e` is `c`, `c + n` or `n + c`.
  static std::optional<std::int64_t> counter_offset(const Expr& e,
                                                    const std::string& c) {
    if (const auto* v = e.as<Expr::Var>()) {
      if (v->name == c) return 0;
      return std::nullopt;
    }
    const auto* b = e.as<Expr::Binary>();
    if (b == nullptr || b->op != BinaryOp::kAdd) return std::nullopt;
    const auto* lv = b->lhs->as<Expr::Var>();
    const auto* rv = b->rhs->as<Expr::Var>();
    const auto* ll = b->lhs->as<Expr::Literal>();
    const auto* rl = b->rhs->as<Expr::Literal>();
    if (lv && lv->name == c && rl && rl->value.is_int()) {
      return rl->value.as_int();
    }
    if (rv && rv->name == c && ll && ll->value.is_int()) {
      return ll->value.as_int();
    }
    return std::nullopt;
  }

  static std::string tuple_string(const Tuple& tuple) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i > 0) s += ", ";
      s += tuple[i]->to_string();
    }
    return s + ")";
  }

  // --- ordinary arcs, guards ---------------------------------------------

  void check_transition(const Transition& t) {
    std::string loc = "transition '" + t.name + "'";
    SpawnShape shape = check_generator_arcs(t, loc);
    const std::string& gen = net_.generator();

    // Sorts of input variables, from the place signatures.
    std::map<std::string, Sort> sorts;
    for (const SpawnPair& sp : shape.pairs) {
      sorts[sp.pid] = Sort::kPid;
      sorts[sp.counter] = Sort::kData;
    }
    for (const Arc& arc : t.inputs) {
      std::string where = loc + ", input " + arc.place;
      const PlaceDecl* decl = net_.place(arc.place);
      if (decl == nullptr) {
        report(Rule::kTyping, where, "undeclared place");
        continue;
      }
      if (arc.place == gen) continue;
      for (const Tuple& tuple : arc.tuples) {
        if (tuple.size() != decl->signature.size()) {
          report(Rule::kTyping, where, "arity mismatch in " +
                                           tuple_string(tuple));
          continue;
        }
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          Sort want = decl->signature[i];
          if (const auto* v = tuple[i]->as<Expr::Var>()) {
            if (shape.counter_vars.contains(v->name)) {
              report(Rule::kReq4, where,
                     "counter variable '" + v->name +
                         "' used outside the generator arcs");
              continue;
            }
            auto [it, fresh] = sorts.emplace(v->name, want);
            if (!fresh && it->second != want) {
              report(Rule::kTyping, where,
                     "variable '" + v->name + "' used with two sorts");
            }
          } else if (const auto* l = tuple[i]->as<Expr::Literal>()) {
            if (l->value.is_pid()) {
              report(Rule::kReq4, where,
                     "pid literal " + l->value.to_string() +
                         " in an input pattern");
            } else if (want == Sort::kPid) {
              report(Rule::kTyping, where,
                     "data literal in a pid position of " +
                         tuple_string(tuple));
            }
          } else {
            report(Rule::kReq4, where,
                   "input patterns are built from variables and data values, "
                   "got " + tuple[i]->to_string());
          }
        }
      }
    }

    for (const Arc& arc : t.outputs) {
      std::string where = loc + ", output " + arc.place;
      const PlaceDecl* decl = net_.place(arc.place);
      if (decl == nullptr) {
        report(Rule::kTyping, where, "undeclared place");
        continue;
      }
      if (arc.place == gen) continue;
      for (const Tuple& tuple : arc.tuples) {
        if (tuple.size() != decl->signature.size()) {
          report(Rule::kTyping, where, "arity mismatch in " +
                                           tuple_string(tuple));
          continue;
        }
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          if (decl->signature[i] == Sort::kPid) {
            check_pid_output(*tuple[i], shape, sorts, where);
          } else {
            check_data_expr(*tuple[i], shape, sorts, where, Rule::kReq4);
          }
        }
      }
    }

    std::optional<Kind> g =
        check_guard_expr(*t.guard, shape, sorts, loc + ", guard");
    if (g && *g != Kind::kBool) {
      report(Rule::kTyping, loc + ", guard", "guard is not boolean");
    }
  }

  void check_pid_output(const Expr& e, const SpawnShape& shape,
                        const std::map<std::string, Sort>& sorts,
                        const std::string& where) {
    if (const auto* v = e.as<Expr::Var>()) {
      auto it = sorts.find(v->name);
      if (it == sorts.end()) {
        report(Rule::kTyping, where, "unbound variable '" + v->name + "'");
      } else if (it->second != Sort::kPid) {
        report(Rule::kTyping, where,
               "data variable '" + v->name + "' in a pid position");
      } else if (!shape.retained.contains(v->name)) {
        report(Rule::kReq4, where,
               "pid '" + v->name +
                   "' is neither retained in the generator place nor a new "
                   "child");
      }
      return;
    }
    if (in_children(e, shape)) return;
    report(Rule::kReq4, where,
           "pid positions take a retained pid or a new child, got " +
               e.to_string());
  }

  static bool in_children(const Expr& e, const SpawnShape& shape) {
    const auto* pc = e.as<Expr::PidChild>();
    if (pc == nullptr) return false;
    for (const SpawnPair& sp : shape.pairs) {
      if (sp.pid != pc->parent) continue;
      std::optional<std::int64_t> j = counter_offset(*pc->index, sp.counter);
      return j && shape.children.contains({pc->parent, *j});
    }
    return false;
  }

  // Data-valued expression over data variables and literals.
  void check_data_expr(const Expr& e, const SpawnShape& shape,
                       const std::map<std::string, Sort>& sorts,
                       const std::string& where, Rule pid_rule) {
    if (const auto* v = e.as<Expr::Var>()) {
      auto it = sorts.find(v->name);
      if (it == sorts.end()) {
        report(Rule::kTyping, where, "unbound variable '" + v->name + "'");
      } else if (shape.counter_vars.contains(v->name)) {
        report(pid_rule, where,
               "counter variable '" + v->name +
                   "' used outside the generator arcs");
      } else if (it->second != Sort::kData) {
        report(Rule::kTyping, where,
               "pid variable '" + v->name + "' in a data position");
      }
      return;
    }
    if (const auto* l = e.as<Expr::Literal>()) {
      if (l->value.is_pid()) {
        report(pid_rule, where, "pid literal " + l->value.to_string());
      }
      return;
    }
    if (const auto* b = e.as<Expr::Binary>(); b && b->op == BinaryOp::kAdd) {
      check_data_expr(*b->lhs, shape, sorts, where, pid_rule);
      check_data_expr(*b->rhs, shape, sorts, where, pid_rule);
      return;
    }
    report(Rule::kTyping, where, "expected a data value, got " + e.to_string());
  }

  std::optional<Kind> check_guard_expr(const Expr& e, const SpawnShape& shape,
                                       const std::map<std::string, Sort>& sorts,
                                       const std::string& where) {
    if (e.as<Expr::BoolLiteral>()) return Kind::kBool;
    if (const auto* l = e.as<Expr::Literal>()) {
      if (l->value.is_pid()) {
        report(Rule::kReq5, where, "pid literal " + l->value.to_string());
        return Kind::kPid;
      }
      return Kind::kData;
    }
    if (const auto* v = e.as<Expr::Var>()) {
      auto it = sorts.find(v->name);
      if (it == sorts.end()) {
        report(Rule::kReq5, where,
               "variable '" + v->name + "' does not occur on an input arc");
        return std::nullopt;
      }
      if (shape.counter_vars.contains(v->name)) {
        report(Rule::kReq5, where,
               "counter variable '" + v->name + "' used in the guard");
        return Kind::kData;
      }
      if (it->second == Sort::kPid) {
        if (!shape.pid_vars.contains(v->name)) {
          report(Rule::kReq5, where,
                 "pid '" + v->name +
                     "' is not taken from the generator place");
        }
        return Kind::kPid;
      }
      return Kind::kData;
    }
    if (e.as<Expr::PidChild>()) {
      if (!in_children(e, shape)) {
        report(Rule::kReq5, where,
               "pid expression " + e.to_string() + " is not a new child");
      }
      return Kind::kPid;
    }
    if (const auto* n = e.as<Expr::Not>()) {
      std::optional<Kind> k = check_guard_expr(*n->operand, shape, sorts, where);
      if (k && *k != Kind::kBool) {
        report(Rule::kTyping, where, "'not' expects a boolean");
      }
      return Kind::kBool;
    }
    const auto& b = *e.as<Expr::Binary>();
    std::optional<Kind> l = check_guard_expr(*b.lhs, shape, sorts, where);
    std::optional<Kind> r = check_guard_expr(*b.rhs, shape, sorts, where);
    auto need = [&](std::optional<Kind> k, Kind want, const char* what) {
      if (!k || *k == want) return;
      Rule rule = (*k == Kind::kPid || want == Kind::kPid) ? Rule::kReq5
                                                           : Rule::kTyping;
      report(rule, where,
             std::string("operator '") + spelling(b.op) + "' expects " + what);
    };
    switch (b.op) {
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        need(l, Kind::kBool, "booleans");
        need(r, Kind::kBool, "booleans");
        return Kind::kBool;
      case BinaryOp::kAdd:
        need(l, Kind::kData, "integers");
        need(r, Kind::kData, "integers");
        return Kind::kData;
      case BinaryOp::kIntEqual:
      case BinaryOp::kIntLess:
        need(l, Kind::kData, "integers");
        need(r, Kind::kData, "integers");
        return Kind::kBool;
      case BinaryOp::kEqual:
        if (l && r && *l != *r) {
          report(*l == Kind::kPid || *r == Kind::kPid ? Rule::kReq5
                                                      : Rule::kTyping,
                 where, "'=' compares values of one sort");
        } else if ((l && *l == Kind::kBool) || (r && *r == Kind::kBool)) {
          report(Rule::kTyping, where, "'=' compares values, not booleans");
        }
        return Kind::kBool;
      default:
        need(l, Kind::kPid, "pids");
        need(r, Kind::kPid, "pids");
        return Kind::kBool;
    }
  }

  const TNet& net_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate(const TNet& net) {
  return Validator(net).run();
}

}  // namespace pidsym
