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

#include "pidsym/model_format.hpp"

#include <cctype>
#include <charconv>
#include <algorithm>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace pidsym {

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string msg = "net violates the t-net requirements:";
  for (const Violation& v : violations) msg += "\n  " + v.to_string();
  return msg;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

namespace {

enum class Tok {
  kIdent,
  kNumber,  // digits, possibly dotted: 3 or 1.2.3
  kString,
  kPunct,
  kNewline,
  kEnd,
};

struct Lexeme {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Pulls `define NAME INT` lines out of the text (leaving blank lines so that
// positions stay put) and records their values unless overridden.
std::string take_defines(std::string_view text, const Defines& overrides,
                         Defines& out) {
  static const std::regex kDefine(
      R"(^[ \t]*define[ \t]+([A-Za-z_][A-Za-z0-9_]*)[ \t]+(-?[0-9]+)[ \t]*(#.*)?$)");
  out = overrides;
  std::string kept;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    std::smatch m;
    if (std::regex_match(line, m, kDefine)) {
      out.emplace(m[1].str(), std::stoll(m[2].str()));
      line.clear();
    }
    kept += line;
    if (eol < text.size()) kept += '\n';
    pos = eol + 1;
  }
  return kept;
}

class Lexer {
 public:
  Lexer(std::string text, const Defines& defines)
      : text_(std::move(text)), defines_(defines) {}

  std::vector<Lexeme> run() {
    std::vector<Lexeme> out;
    bool line_start = true;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        out.push_back({Tok::kNewline, "\n", line_, col_});
        advance();
        line_start = true;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
        continue;
      }
      if (c == '#') {
        char n = peek(1);
        bool comment = line_start || n == '\0' || n == ' ' || n == '\t' ||
                       n == '\n' || n == '\r';
        if (comment) {
          while (pos_ < text_.size() && text_[pos_] != '\n') advance();
          continue;
        }
      }
      line_start = false;
      int line = line_;
      int col = col_;
      if (ident_start(c)) {
        std::string word;
        while (pos_ < text_.size() && ident_char(text_[pos_])) {
          word += text_[pos_];
          advance();
        }
        if (auto it = defines_.find(word); it != defines_.end()) {
          if (it->second < 0) {
            out.push_back({Tok::kPunct, "-", line, col});
            out.push_back({Tok::kNumber, std::to_string(-it->second), line, col});
          } else {
            out.push_back({Tok::kNumber, std::to_string(it->second), line, col});
          }
        } else {
          out.push_back({Tok::kIdent, word, line, col});
        }
        continue;
      }
      if (digit(c)) {
        std::string num;
        while (pos_ < text_.size()) {
          char d = text_[pos_];
          if (digit(d) || (d == '.' && digit(peek(1)) && !num.empty())) {
            num += d;
            advance();
          } else {
            break;
          }
        }
        out.push_back({Tok::kNumber, num, line, col});
        continue;
      }
      if (c == '"') {
        advance();
        std::string s;
        while (pos_ < text_.size() && text_[pos_] != '"' &&
               text_[pos_] != '\n') {
          s += text_[pos_];
          advance();
        }
        if (pos_ >= text_.size() || text_[pos_] != '"') {
          throw SyntaxError(line, col, "unterminated string");
        }
        advance();
        out.push_back({Tok::kString, s, line, col});
        continue;
      }
      static const char* kTwo[] = {"==", "<1", "<<", "#1", "##"};
      bool matched = false;
      for (const char* op : kTwo) {
        if (c == op[0] && peek(1) == op[1]) {
          out.push_back({Tok::kPunct, op, line, col});
          advance();
          advance();
          matched = true;
          break;
        }
      }
      if (matched) continue;
      if (std::string_view("{}();,.+-=<").find(c) != std::string_view::npos) {
        out.push_back({Tok::kPunct, std::string(1, c), line, col});
        advance();
        continue;
      }
      throw SyntaxError(line, col, std::string("unexpected character '") + c +
                                       "'");
    }
    out.push_back({Tok::kEnd, "", line_, col_});
    return out;
  }

 private:
  char peek(std::size_t k) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string text_;
  const Defines& defines_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Lexeme> tokens) : toks_(std::move(tokens)) {}

  TNet parse_net() {
    skip_newlines();
    if (at_end()) fail(cur(), "empty model");
    expect_word("net");
    std::string name = expect(Tok::kIdent, "a net name").text;
    end_of_line();

    std::vector<PlaceDecl> places;
    std::vector<Transition> transitions;
    std::vector<std::pair<Lexeme, std::vector<std::vector<Lexeme>>>> inits;
    while (true) {
      skip_newlines();
      if (at_end()) break;
      const Lexeme& t = cur();
      if (is_word("place")) {
        next();
        places.push_back(parse_place());
      } else if (is_word("init")) {
        next();
        Lexeme place = expect(Tok::kIdent, "a place name");
        inits.emplace_back(place, parse_literal_block());
        end_of_line();
      } else if (is_word("trans")) {
        next();
        transitions.push_back(parse_transition());
      } else {
        fail(t, "expected place, init or trans, got " + show(t));
      }
    }

    Marking initial;
    std::set<std::string> initialized;
    for (auto& [place_tok, tuples] : inits) {
      const PlaceDecl* decl = find_place(places, place_tok.text);
      if (decl == nullptr) {
        fail(place_tok, "init of undeclared place '" + place_tok.text + "'");
      }
      initialized.insert(decl->name);
      for (const auto& tuple : tuples) {
        initial.add(decl->name, typed_token(*decl, tuple, place_tok));
      }
    }
    for (const PlaceDecl& p : places) {
      if (p.generator && !initialized.contains(p.name)) {
        initial.add(p.name, Token{Value(Pid{1}), Value(0)});
      }
    }
    return TNet(name, std::move(places), std::move(transitions),
                std::move(initial));
  }

  Marking parse_marking_lines(const TNet& net) {
    Marking m;
    while (true) {
      skip_newlines();
      if (at_end()) break;
      Lexeme place = expect(Tok::kIdent, "a place name");
      const PlaceDecl* decl = net.place(place.text);
      if (decl == nullptr) fail(place, "unknown place '" + place.text + "'");
      for (const auto& tuple : parse_literal_block()) {
        m.add(decl->name, typed_token(*decl, tuple, place));
      }
      end_of_line();
    }
    return m;
  }

 private:
  // --- token plumbing ----------------------------------------------------

  const Lexeme& cur() const { return toks_[pos_]; }
  const Lexeme& next() { return toks_[pos_++]; }
  bool at_end() const { return cur().kind == Tok::kEnd; }
  bool is_punct(std::string_view p) const {
    return cur().kind == Tok::kPunct && cur().text == p;
  }
  bool is_word(std::string_view w) const {
    return cur().kind == Tok::kIdent && cur().text == w;
  }

  [[noreturn]] static void fail(const Lexeme& t, const std::string& msg) {
    throw SyntaxError(t.line, t.column, msg);
  }
  static std::string show(const Lexeme& t) {
    switch (t.kind) {
      case Tok::kNewline:
        return "end of line";
      case Tok::kEnd:
        return "end of input";
      case Tok::kString:
        return "\"" + t.text + "\"";
      default:
        return "'" + t.text + "'";
    }
  }

  const Lexeme& expect(Tok kind, const std::string& what) {
    if (cur().kind != kind) fail(cur(), "expected " + what + ", got " + show(cur()));
    return next();
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) {
      fail(cur(), "expected '" + std::string(p) + "', got " + show(cur()));
    }
    next();
  }
  void expect_word(std::string_view w) {
    if (!is_word(w)) {
      fail(cur(), "expected '" + std::string(w) + "', got " + show(cur()));
    }
    next();
  }
  void skip_newlines() {
    while (cur().kind == Tok::kNewline) next();
  }
  void end_of_line() {
    if (cur().kind == Tok::kEnd) return;
    if (cur().kind != Tok::kNewline) {
      fail(cur(), "expected end of line, got " + show(cur()));
    }
    next();
  }

  static const PlaceDecl* find_place(const std::vector<PlaceDecl>& places,
                                     const std::string& name) {
    for (const PlaceDecl& p : places) {
      if (p.name == name) return &p;
    }
    return nullptr;
  }

  // --- declarations ------------------------------------------------------

  PlaceDecl parse_place() {
    PlaceDecl decl;
    decl.name = expect(Tok::kIdent, "a place name").text;
    if (is_word("GEN")) {
      next();
      decl.generator = true;
      decl.signature = {Sort::kPid, Sort::kData};
    } else {
      while (true) {
        const Lexeme& s = expect(Tok::kIdent, "P or D");
        if (s.text == "P") {
          decl.signature.push_back(Sort::kPid);
        } else if (s.text == "D") {
          decl.signature.push_back(Sort::kData);
        } else {
          fail(s, "expected P or D, got " + show(s));
        }
        if (!is_punct(",")) break;
        next();
      }
    }
    end_of_line();
    return decl;
  }

  Transition parse_transition() {
    Transition t;
    t.name = expect(Tok::kIdent, "a transition name").text;
    end_of_line();
    bool has_guard = false;
    while (true) {
      skip_newlines();
      if (at_end()) fail(cur(), "transition '" + t.name + "' lacks 'end'");
      if (is_word("end")) {
        next();
        end_of_line();
        break;
      }
      if (is_word("guard")) {
        const Lexeme& g = next();
        if (has_guard) fail(g, "second guard for '" + t.name + "'");
        has_guard = true;
        t.guard = parse_expr();
        end_of_line();
      } else if (is_word("in") || is_word("out")) {
        bool input = next().text == "in";
        std::string place = expect(Tok::kIdent, "a place name").text;
        std::vector<Tuple> tuples = parse_expr_block();
        std::vector<Arc>& arcs = input ? t.inputs : t.outputs;
        auto it = std::find_if(arcs.begin(), arcs.end(),
                               [&](const Arc& a) { return a.place == place; });
        if (it == arcs.end()) {
          arcs.push_back({place, std::move(tuples)});
        } else {
          for (Tuple& tu : tuples) it->tuples.push_back(std::move(tu));
        }
        end_of_line();
      } else {
        fail(cur(), "expected guard, in, out or end, got " + show(cur()));
      }
    }
    if (!t.guard) t.guard = make_bool(true);
    return t;
  }

  // `{ tuple; tuple; ... }`, newlines allowed inside.
  template <typename F>
  void parse_block(F&& item) {
    expect_punct("{");
    skip_newlines();
    if (is_punct("}")) {
      next();
      return;
    }
    while (true) {
      skip_newlines();
      item();
      skip_newlines();
      if (is_punct(";")) {
        next();
        skip_newlines();
        if (is_punct("}")) {
          next();
          return;
        }
        continue;
      }
      expect_punct("}");
      return;
    }
  }

  std::vector<Tuple> parse_expr_block() {
    std::vector<Tuple> out;
    parse_block([&] {
      Tuple tuple;
      if (is_punct("(")) {
        next();
        tuple.push_back(parse_expr());
        while (is_punct(",")) {
          next();
          tuple.push_back(parse_expr());
        }
        expect_punct(")");
      } else {
        tuple.push_back(parse_expr());
      }
      out.push_back(std::move(tuple));
    });
    return out;
  }

  // Literal tuples; components stay tokens until typed by their place.
  std::vector<std::vector<Lexeme>> parse_literal_block() {
    std::vector<std::vector<Lexeme>> out;
    parse_block([&] {
      std::vector<Lexeme> tuple;
      auto literal = [&] {
        if (is_punct("-")) {
          Lexeme minus = next();
          Lexeme n = expect(Tok::kNumber, "a number");
          n.text = "-" + n.text;
          n.line = minus.line;
          n.column = minus.column;
          tuple.push_back(n);
        } else if (cur().kind == Tok::kNumber || cur().kind == Tok::kString) {
          tuple.push_back(next());
        } else if (is_punct("(") && toks_[pos_ + 1].kind == Tok::kPunct &&
                   toks_[pos_ + 1].text == ")") {
          Lexeme empty = next();
          next();
          empty.kind = Tok::kNumber;
          empty.text = "()";
          tuple.push_back(empty);
        } else {
          fail(cur(), "expected a literal, got " + show(cur()));
        }
      };
      if (is_punct("(") &&
          !(toks_[pos_ + 1].kind == Tok::kPunct && toks_[pos_ + 1].text == ")")) {
        next();
        literal();
        while (is_punct(",")) {
          next();
          literal();
        }
        expect_punct(")");
      } else {
        literal();
      }
      out.push_back(std::move(tuple));
    });
    return out;
  }

  static pidsym::Token typed_token(const PlaceDecl& decl,
                                   const std::vector<Lexeme>& tuple,
                                   const Lexeme& where) {
    if (tuple.size() != decl.signature.size()) {
      fail(tuple.empty() ? where : tuple.front(),
           "place '" + decl.name + "' takes " +
               std::to_string(decl.signature.size()) + " components, got " +
               std::to_string(tuple.size()));
    }
    pidsym::Token out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      const Lexeme& t = tuple[i];
      if (decl.signature[i] == Sort::kPid) {
        if (t.kind != Tok::kNumber || t.text.starts_with("-")) {
          fail(t, "expected a pid, got " + show(t));
        }
        try {
          out.push_back(Value(Pid::parse(t.text)));
        } catch (const std::invalid_argument& e) {
          fail(t, e.what());
        }
      } else if (t.kind == Tok::kString) {
        out.push_back(Value(Symbol{t.text}));
      } else {
        out.push_back(Value(to_int(t)));
      }
    }
    return out;
  }

  static std::int64_t to_int(const Lexeme& t) {
    std::int64_t v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) fail(t, "expected an integer, got " + show(t));
    return v;
  }

  // --- expressions -------------------------------------------------------

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (is_word("or")) {
      next();
      lhs = make_binary(BinaryOp::kOr, lhs, parse_and());
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_not();
    while (is_word("and")) {
      next();
      lhs = make_binary(BinaryOp::kAnd, lhs, parse_not());
    }
    return lhs;
  }

  ExprPtr parse_not() {
    if (is_word("not")) {
      next();
      return make_not(parse_not());
    }
    return parse_cmp();
  }

  ExprPtr parse_cmp() {
    ExprPtr lhs = parse_sum();
    static const std::pair<const char*, BinaryOp> kOps[] = {
        {"=", BinaryOp::kEqual},        {"==", BinaryOp::kIntEqual},
        {"<", BinaryOp::kIntLess},      {"<1", BinaryOp::kChild},
        {"<<", BinaryOp::kAncestor},    {"#1", BinaryOp::kNextSibling},
        {"##", BinaryOp::kElderSibling}};
    for (const auto& [text, op] : kOps) {
      if (is_punct(text)) {
        next();
        return make_binary(op, lhs, parse_sum());
      }
    }
    return lhs;
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_atom();
    while (is_punct("+")) {
      next();
      lhs = make_binary(BinaryOp::kAdd, lhs, parse_atom());
    }
    return lhs;
  }

  ExprPtr parse_atom() {
    const Lexeme& t = cur();
    if (t.kind == Tok::kNumber) {
      next();
      if (t.text.find('.') != std::string::npos) {
        return make_literal(Value(Pid::parse(t.text)));
      }
      return make_literal(Value(to_int(t)));
    }
    if (is_punct("-")) {
      next();
      Lexeme n = expect(Tok::kNumber, "a number after '-'");
      if (n.text.find('.') != std::string::npos) fail(n, "pids cannot be negative");
      n.text = "-" + n.text;
      return make_literal(Value(to_int(n)));
    }
    if (t.kind == Tok::kString) {
      next();
      return make_literal(Value(Symbol{t.text}));
    }
    if (is_punct("(")) {
      next();
      ExprPtr e = parse_expr();
      expect_punct(")");
      return e;
    }
    if (t.kind == Tok::kIdent) {
      static const std::set<std::string, std::less<>> kReserved = {
          "and", "or", "not", "guard", "in", "out", "end", "trans", "place",
          "init", "net"};
      if (t.text == "true" || t.text == "false") {
        next();
        return make_bool(t.text == "true");
      }
      if (kReserved.contains(t.text)) fail(t, "unexpected keyword " + show(t));
      next();
      if (is_punct(".")) {
        next();
        expect_punct("(");
        ExprPtr index = parse_expr();
        expect_punct(")");
        return make_pid_child(t.text, index);
      }
      return make_var(t.text);
    }
    fail(t, "expected an expression, got " + show(t));
  }

  std::vector<Lexeme> toks_;
  std::size_t pos_ = 0;
};

std::vector<Lexeme> lex(std::string_view text, const Defines& overrides) {
  Defines defines;
  std::string body = take_defines(text, overrides, defines);
  return Lexer(std::move(body), defines).run();
}

std::string sorts_text(const PlaceDecl& p) {
  if (p.generator) return "GEN";
  std::string out;
  for (std::size_t i = 0; i < p.signature.size(); ++i) {
    if (i > 0) out += ",";
    out += p.signature[i] == Sort::kPid ? "P" : "D";
  }
  return out;
}

std::string tuple_text(const Tuple& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += tuple[i]->to_string();
  }
  return out + ")";
}

std::string bag_text(const TokenBag& bag) {
  std::string out = "{ ";
  bool first = true;
  for (const auto& [token, n] : bag) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!first) out += "; ";
      first = false;
      out += to_string(token);
    }
  }
  return out + " }";
}

}  // namespace

TNet parse_model_unchecked(std::string_view text, const Defines& overrides) {
  return Parser(lex(text, overrides)).parse_net();
}

TNet parse_model(std::string_view text, const Defines& overrides) {
  TNet net = parse_model_unchecked(text, overrides);
  std::vector<Violation> violations = validate(net);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return net;
}

std::string print_model(const TNet& net) {
  std::ostringstream os;
  os << "net " << net.name() << "\n";
  for (const PlaceDecl& p : net.places()) {
    os << "place " << p.name << " " << sorts_text(p) << "\n";
  }
  for (const auto& [place, bag] : net.initial().places()) {
    os << "init " << place << " " << bag_text(bag) << "\n";
  }
  for (const Transition& t : net.transitions()) {
    os << "trans " << t.name << "\n";
    const auto* b = t.guard->as<Expr::BoolLiteral>();
    if (b == nullptr || !b->value) os << "  guard " << t.guard->to_string() << "\n";
    for (const auto* arcs : {&t.inputs, &t.outputs}) {
      const char* kw = arcs == &t.inputs ? "in" : "out";
      for (const Arc& a : *arcs) {
        os << "  " << kw << " " << a.place << " {";
        for (std::size_t i = 0; i < a.tuples.size(); ++i) {
          os << (i > 0 ? "; " : " ") << tuple_text(a.tuples[i]);
        }
        os << " }\n";
      }
    }
    os << "end\n";
  }
  return os.str();
}

Marking parse_marking(std::string_view text, const TNet& net) {
  return Parser(lex(text, {})).parse_marking_lines(net);
}

std::string print_marking(const Marking& m) {
  std::string out;
  for (const auto& [place, bag] : m.places()) {
    out += place + " " + bag_text(bag) + "\n";
  }
  return out;
}

}  // namespace pidsym
