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

#ifndef PIDSYM_EXPR_HPP_
#define PIDSYM_EXPR_HPP_

#include <map>
#include <memory>
#include <string>
#include <variant>

#include "pidsym/marking.hpp"

namespace pidsym {

using Binding = std::map<std::string, Value>;

enum class BinaryOp {
  kAdd,           // +    integers
  kEqual,         // =    any two values of the same sort
  kIntEqual,      // ==   integers
  kIntLess,       // <    integers
  kChild,         // <1   pids
  kAncestor,      // <<   pids
  kNextSibling,   // #1   pids
  kElderSibling,  // ##   pids
  kAnd,
  kOr,
};

const char* spelling(BinaryOp op);
bool is_pid_relation(BinaryOp op);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree. Arc tuples, input patterns and guards all use
// it; which node kinds are legal where is checked by validate().
class Expr {
 public:
  struct Literal {
    Value value;
  };
  struct BoolLiteral {
    bool value;
  };
  struct Var {
    std::string name;
  };
  struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct Not {
    ExprPtr operand;
  };
  // parent.(index): the child pid `index` of the pid bound to `parent`.
  struct PidChild {
    std::string parent;
    ExprPtr index;
  };
  using Node = std::variant<Literal, BoolLiteral, Var, Binary, Not, PidChild>;

  explicit Expr(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }
  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

  std::string to_string() const;

 private:
  Node node_;
};

bool operator==(const Expr& a, const Expr& b);
bool same_expr(const ExprPtr& a, const ExprPtr& b);

ExprPtr make_literal(Value v);
ExprPtr make_bool(bool b);
ExprPtr make_var(std::string name);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_not(ExprPtr operand);
ExprPtr make_pid_child(std::string parent, ExprPtr index);

using EvalResult = std::variant<bool, Value>;

// Evaluates under `binding`. Throws GuardTypeError on sort errors (a pid
// operator applied to data, arithmetic on pids, unbound variables, ...).
EvalResult evaluate(const Expr& e, const Binding& binding);
Value evaluate_value(const Expr& e, const Binding& binding);
bool evaluate_bool(const Expr& e, const Binding& binding);

}  // namespace pidsym

#endif  // PIDSYM_EXPR_HPP_
