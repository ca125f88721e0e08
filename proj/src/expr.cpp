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

#include "pidsym/expr.hpp"

#include "pidsym/errors.hpp"

namespace pidsym {

const char* spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd:
      return "+";
    case BinaryOp::kEqual:
      return "=";
    case BinaryOp::kIntEqual:
      return "==";
    case BinaryOp::kIntLess:
      return "<";
    case BinaryOp::kChild:
      return "<1";
    case BinaryOp::kAncestor:
      return "<<";
    case BinaryOp::kNextSibling:
      return "#1";
    case BinaryOp::kElderSibling:
      return "##";
    case BinaryOp::kAnd:
      return "and";
    case BinaryOp::kOr:
      return "or";
  }
  return "?";
}

bool is_pid_relation(BinaryOp op) {
  return op == BinaryOp::kChild || op == BinaryOp::kAncestor ||
         op == BinaryOp::kNextSibling || op == BinaryOp::kElderSibling;
}

namespace {

// Binding strength used by the printer; higher binds tighter.
int precedence(const Expr& e) {
  if (const auto* b = e.as<Expr::Binary>()) {
    switch (b->op) {
      case BinaryOp::kOr:
        return 1;
      case BinaryOp::kAnd:
        return 2;
      case BinaryOp::kAdd:
        return 5;
      default:
        return 4;
    }
  }
  if (e.as<Expr::Not>()) return 3;
  return 6;
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = e.to_string();
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string Expr::to_string() const {
  return std::visit(
      [this](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return n.value.to_string();
        } else if constexpr (std::is_same_v<T, BoolLiteral>) {
          return n.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Var>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, Binary>) {
          int p = precedence(*this);
          // Comparisons do not chain, so both sides of one need to bind
          // tighter; the left-associative operators accept equal strength
          // on the left only.
          int left = p == 4 ? p + 1 : p;
          return wrap(*n.lhs, left) + " " + spelling(n.op) + " " +
                 wrap(*n.rhs, p + 1);
        } else if constexpr (std::is_same_v<T, Not>) {
          return "not " + wrap(*n.operand, 3);
        } else {
          return n.parent + ".(" + n.index->to_string() + ")";
        }
      },
      node_);
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&b](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        const T& m = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, Expr::Literal>) {
          return n.value == m.value;
        } else if constexpr (std::is_same_v<T, Expr::BoolLiteral>) {
          return n.value == m.value;
        } else if constexpr (std::is_same_v<T, Expr::Var>) {
          return n.name == m.name;
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          return n.op == m.op && same_expr(n.lhs, m.lhs) &&
                 same_expr(n.rhs, m.rhs);
        } else if constexpr (std::is_same_v<T, Expr::Not>) {
          return same_expr(n.operand, m.operand);
        } else {
          return n.parent == m.parent && same_expr(n.index, m.index);
        }
      },
      a.node());
}

ExprPtr make_literal(Value v) {
  return std::make_shared<Expr>(Expr::Literal{std::move(v)});
}
ExprPtr make_bool(bool b) {
  return std::make_shared<Expr>(Expr::BoolLiteral{b});
}
ExprPtr make_var(std::string name) {
  return std::make_shared<Expr>(Expr::Var{std::move(name)});
}
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<Expr>(
      Expr::Binary{op, std::move(lhs), std::move(rhs)});
}
ExprPtr make_not(ExprPtr operand) {
  return std::make_shared<Expr>(Expr::Not{std::move(operand)});
}
ExprPtr make_pid_child(std::string parent, ExprPtr index) {
  return std::make_shared<Expr>(
      Expr::PidChild{std::move(parent), std::move(index)});
}

namespace {

const Value& lookup(const Binding& binding, const std::string& name) {
  auto it = binding.find(name);
  if (it == binding.end()) {
    throw GuardTypeError("unbound variable '" + name + "'");
  }
  return it->second;
}

std::int64_t need_int(const EvalResult& r, BinaryOp op) {
  const Value* v = std::get_if<Value>(&r);
  if (v == nullptr || !v->is_int()) {
    throw GuardTypeError(std::string("operator '") + spelling(op) +
                         "' expects integers");
  }
  return v->as_int();
}

const Pid& need_pid(const EvalResult& r, BinaryOp op) {
  const Value* v = std::get_if<Value>(&r);
  if (v == nullptr || !v->is_pid()) {
    throw GuardTypeError(std::string("operator '") + spelling(op) +
                         "' expects pids");
  }
  return v->as_pid();
}

bool need_bool(const EvalResult& r, const char* what) {
  const bool* b = std::get_if<bool>(&r);
  if (b == nullptr) {
    throw GuardTypeError(std::string(what) + " expects a boolean");
  }
  return *b;
}

}  // namespace

EvalResult evaluate(const Expr& e, const Binding& binding) {
  return std::visit(
      [&binding](const auto& n) -> EvalResult {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Literal>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Expr::BoolLiteral>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Expr::Var>) {
          return lookup(binding, n.name);
        } else if constexpr (std::is_same_v<T, Expr::Not>) {
          return !need_bool(evaluate(*n.operand, binding), "not");
        } else if constexpr (std::is_same_v<T, Expr::PidChild>) {
          const Value& parent = lookup(binding, n.parent);
          if (!parent.is_pid()) {
            throw GuardTypeError("'" + n.parent + "' is not a pid");
          }
          std::int64_t k = need_int(evaluate(*n.index, binding), BinaryOp::kAdd);
          if (k < 1) throw GuardTypeError("child index must be >= 1");
          return Value(parent.as_pid().child(static_cast<Pid::Part>(k)));
        } else {
          if (n.op == BinaryOp::kAnd) {
            return need_bool(evaluate(*n.lhs, binding), "and") &&
                   need_bool(evaluate(*n.rhs, binding), "and");
          }
          if (n.op == BinaryOp::kOr) {
            return need_bool(evaluate(*n.lhs, binding), "or") ||
                   need_bool(evaluate(*n.rhs, binding), "or");
          }
          EvalResult l = evaluate(*n.lhs, binding);
          EvalResult r = evaluate(*n.rhs, binding);
          switch (n.op) {
            case BinaryOp::kAdd:
              return Value(need_int(l, n.op) + need_int(r, n.op));
            case BinaryOp::kIntEqual:
              return need_int(l, n.op) == need_int(r, n.op);
            case BinaryOp::kIntLess:
              return need_int(l, n.op) < need_int(r, n.op);
            case BinaryOp::kEqual: {
              const Value* a = std::get_if<Value>(&l);
              const Value* b = std::get_if<Value>(&r);
              if (a == nullptr || b == nullptr || a->is_pid() != b->is_pid()) {
                throw GuardTypeError("'=' compares values of one sort");
              }
              return *a == *b;
            }
            case BinaryOp::kChild:
              return is_child(need_pid(l, n.op), need_pid(r, n.op));
            case BinaryOp::kAncestor:
              return is_ancestor(need_pid(l, n.op), need_pid(r, n.op));
            case BinaryOp::kNextSibling:
              return is_next_sibling(need_pid(l, n.op), need_pid(r, n.op));
            case BinaryOp::kElderSibling:
              return is_elder_sibling(need_pid(l, n.op), need_pid(r, n.op));
            default:
              throw GuardTypeError("unhandled operator");
          }
        }
      },
      e.node());
}

Value evaluate_value(const Expr& e, const Binding& binding) {
  EvalResult r = evaluate(e, binding);
  if (const Value* v = std::get_if<Value>(&r)) return *v;
  throw GuardTypeError("expected a value, got a boolean in '" +
                       e.to_string() + "'");
}

bool evaluate_bool(const Expr& e, const Binding& binding) {
  return need_bool(evaluate(e, binding), "guard");
}

}  // namespace pidsym
