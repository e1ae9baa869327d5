// Copyright 2026 The Choice Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choice/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace choice {

bool valid_identifier(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

FormulaPtr var(std::string name) {
  if (!valid_identifier(name)) {
    throw std::invalid_argument("invalid identifier: '" + name + "'");
  }
  return std::make_shared<Formula>(Formula{Op::Var, std::move(name), {}, {}});
}

FormulaPtr neg(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{Op::Not, {}, std::move(f), {}});
}

FormulaPtr conj(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{Op::And, {}, std::move(l), std::move(r)});
}

FormulaPtr disj(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{Op::Or, {}, std::move(l), std::move(r)});
}

FormulaPtr ord(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{Op::Ord, {}, std::move(l), std::move(r)});
}

bool equal(const Formula& a, const Formula& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::Var:
      return a.name == b.name;
    case Op::Not:
      return equal(*a.lhs, *b.lhs);
    default:
      return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, Not, And, Or, Ord, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      int line = line_, col = col_;
      if (eof()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      char c = src_[pos_];
      if (c >= 'a' && c <= 'z') {
        std::string id;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                          src_[pos_] == '_')) {
          id.push_back(src_[pos_]);
          advance();
        }
        out.push_back({Tok::Ident, std::move(id), line, col});
        continue;
      }
      if (c == '!') {
        advance();
        out.push_back({Tok::Not, "!", line, col});
        continue;
      }
      if (c == '&') {
        advance();
        out.push_back({Tok::And, "&", line, col});
        continue;
      }
      if (c == '|') {
        advance();
        out.push_back({Tok::Or, "|", line, col});
        continue;
      }
      if (c == '>') {
        advance();
        if (eof() || src_[pos_] != '<') {
          throw ParseError("lexical error: expected '<' after '>'", line, col);
        }
        advance();
        out.push_back({Tok::Ord, "><", line, col});
        continue;
      }
      if (c == '(') {
        advance();
        out.push_back({Tok::LParen, "(", line, col});
        continue;
      }
      if (c == ')') {
        advance();
        out.push_back({Tok::RParen, ")", line, col});
        continue;
      }
      // Unicode aliases for the connectives.
      if (take_utf8("\xc2\xac")) {  // ¬
        out.push_back({Tok::Not, "!", line, col});
        continue;
      }
      if (take_utf8("\xe2\x88\xa7")) {  // ∧
        out.push_back({Tok::And, "&", line, col});
        continue;
      }
      if (take_utf8("\xe2\x88\xa8")) {  // ∨
        out.push_back({Tok::Or, "|", line, col});
        continue;
      }
      if (take_utf8("\xc3\x97")) {  // ×
        out.push_back({Tok::Ord, "><", line, col});
        continue;
      }
      throw ParseError(std::string("lexical error: unexpected character '") +
                           c + "'",
                       line, col);
    }
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!eof() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      advance();
    }
  }

  bool take_utf8(std::string_view seq) {
    if (src_.substr(pos_, seq.size()) != seq) return false;
    for (std::size_t i = 0; i < seq.size(); ++i) ++pos_;
    ++col_;
    return true;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---------------------------------------------------------------------------
// Parser (right-associative descent mirroring the grammar)
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr run() {
    FormulaPtr f = parse_ord();
    if (peek().kind != Tok::End) {
      throw err("syntax error: unexpected trailing input");
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  Token take() { return toks_[pos_++]; }

  ParseError err(const std::string& msg) const {
    return ParseError(msg, peek().line, peek().column);
  }

  FormulaPtr parse_ord() {
    FormulaPtr l = parse_or();
    if (peek().kind == Tok::Ord) {
      take();
      return ord(std::move(l), parse_ord());
    }
    return l;
  }

  FormulaPtr parse_or() {
    FormulaPtr l = parse_and();
    if (peek().kind == Tok::Or) {
      take();
      return disj(std::move(l), parse_or());
    }
    return l;
  }

  FormulaPtr parse_and() {
    FormulaPtr l = parse_not();
    if (peek().kind == Tok::And) {
      take();
      return conj(std::move(l), parse_and());
    }
    return l;
  }

  FormulaPtr parse_not() {
    if (peek().kind == Tok::Not) {
      take();
      return neg(parse_not());
    }
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    switch (peek().kind) {
      case Tok::Ident:
        return var(take().text);
      case Tok::LParen: {
        take();
        FormulaPtr f = parse_ord();
        if (peek().kind != Tok::RParen) {
          throw err("syntax error: expected ')'");
        }
        take();
        return f;
      }
      case Tok::End:
        throw err("syntax error: unexpected end of input");
      default:
        throw err("syntax error: expected identifier or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Ord:
      return 1;
    case Op::Or:
      return 2;
    case Op::And:
      return 3;
    case Op::Not:
      return 4;
    case Op::Var:
      return 5;
  }
  return 5;
}

const char* symbol(Op op) {
  switch (op) {
    case Op::Ord:
      return "><";
    case Op::Or:
      return "|";
    case Op::And:
      return "&";
    default:
      return "";
  }
}

// min_prec is the loosest operator allowed without parentheses. The left
// operand of a binary connective is rendered one level tighter so that
// left-nested chains of the same (right-associative) connective keep their
// parentheses.
void print_rec(const Formula& f, int min_prec, std::string& out) {
  int p = precedence(f.op);
  bool parens = p < min_prec;
  if (parens) out.push_back('(');
  switch (f.op) {
    case Op::Var:
      out += f.name;
      break;
    case Op::Not:
      out.push_back('!');
      print_rec(*f.lhs, precedence(Op::Not), out);
      break;
    default:
      print_rec(*f.lhs, p + 1, out);
      out.push_back(' ');
      out += symbol(f.op);
      out.push_back(' ');
      print_rec(*f.rhs, p, out);
      break;
  }
  if (parens) out.push_back(')');
}

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.op) {
    case Op::Var:
      out.insert(f.name);
      break;
    case Op::Not:
      collect_vars(*f.lhs, out);
      break;
    default:
      collect_vars(*f.lhs, out);
      collect_vars(*f.rhs, out);
      break;
  }
}

}  // namespace

FormulaPtr parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

std::set<std::string> vars(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Interpretations
// ---------------------------------------------------------------------------

Interpretation::Interpretation(std::set<std::string> vs)
    : vars_(std::move(vs)) {
  for (const auto& v : vars_) {
    if (!valid_identifier(v)) {
      throw std::invalid_argument("invalid identifier: '" + v + "'");
    }
  }
}

Interpretation Interpretation::from_csv(std::string_view csv) {
  std::set<std::string> vs;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view item = csv.substr(
        pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    if (!item.empty()) {
      if (!valid_identifier(item)) {
        throw std::invalid_argument("invalid identifier in interpretation: '" +
                                    std::string(item) + "'");
      }
      vs.emplace(item);
    } else if (comma != std::string_view::npos) {
      throw std::invalid_argument("empty item in interpretation list");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Interpretation(std::move(vs));
}

std::string Interpretation::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& v : vars_) {
    if (!first) out.push_back(',');
    out += v;
    first = false;
  }
  out.push_back('}');
  return out;
}

std::string Interpretation::to_csv() const {
  std::string out;
  bool first = true;
  for (const auto& v : vars_) {
    if (!first) out.push_back(',');
    out += v;
    first = false;
  }
  return out;
}

unsigned long long subset_count(std::size_t n_vars, int cap) {
  if (cap < 0 || n_vars > static_cast<std::size_t>(cap)) {
    throw CapExceeded("variable cap exceeded: " + std::to_string(n_vars) +
                      " variables, cap " + std::to_string(cap));
  }
  if (n_vars >= 63) {
    throw CapExceeded("too many variables to enumerate");
  }
  return 1ULL << n_vars;
}

Interpretation subset_at(const std::vector<std::string>& sorted_universe,
                         unsigned long long index) {
  std::set<std::string> vs;
  std::size_t n = sorted_universe.size();
  for (std::size_t i = 0; i < n; ++i) {
    // First variable is the most significant bit.
    if (index >> (n - 1 - i) & 1ULL) vs.insert(sorted_universe[i]);
  }
  return Interpretation(std::move(vs));
}

std::vector<Interpretation> all_subsets(const std::set<std::string>& universe,
                                        int cap) {
  unsigned long long count = subset_count(universe.size(), cap);
  std::vector<std::string> sorted(universe.begin(), universe.end());
  std::vector<Interpretation> out;
  out.reserve(count);
  for (unsigned long long i = 0; i < count; ++i) {
    out.push_back(subset_at(sorted, i));
  }
  return out;
}

std::vector<Interpretation> all_interpretations(const Formula& f, int cap) {
  return all_subsets(vars(f), cap);
}

}  // namespace choice
