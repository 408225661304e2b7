// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "frontend.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <vector>

#include "errors.hpp"
#include "externs.hpp"

namespace kombi {

namespace {

const char* const kSeqBinder = "%seq";

enum class Tok {
  Int, Ident, Hole, If, Then, Else, Fi, True, False,
  Lambda, Dot, LParen, RParen, LBracket, RBracket, Comma, Bang, Assign, Semi,
  Plus, Minus, Star, Leq, Lt, Eq, Cons, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::End, "", line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Int;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          t.text += advance();
      } else if (ident_start(c)) {
        while (pos_ < text_.size() && ident_char(text_[pos_])) t.text += advance();
        t.kind = keyword(t.text);
      } else if (c == '%') {
        throw ParseError("identifiers starting with '%' are reserved", line_, column_);
      } else if (c == '?') {
        advance();
        if (pos_ >= text_.size() || !ident_start(text_[pos_]))
          throw ParseError("expected metavariable name after '?'", line_, column_);
        while (pos_ < text_.size() && ident_char(text_[pos_])) t.text += advance();
        t.kind = Tok::Hole;
      } else if (text_.compare(pos_, 2, "\xCE\xBB") == 0) {  // UTF-8 lambda
        pos_ += 2;
        ++column_;
        t.kind = Tok::Lambda;
      } else {
        t.kind = symbol();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static Tok keyword(const std::string& s) {
    if (s == "if") return Tok::If;
    if (s == "then") return Tok::Then;
    if (s == "else") return Tok::Else;
    if (s == "fi") return Tok::Fi;
    if (s == "true") return Tok::True;
    if (s == "false") return Tok::False;
    return Tok::Ident;
  }

  Tok symbol() {
    std::size_t line = line_, col = column_;
    char c = advance();
    auto next_is = [&](char n) {
      if (pos_ < text_.size() && text_[pos_] == n) {
        advance();
        return true;
      }
      return false;
    };
    switch (c) {
      case '\\': return Tok::Lambda;
      case '.': return Tok::Dot;
      case '(': return Tok::LParen;
      case ')': return Tok::RParen;
      case '[': return Tok::LBracket;
      case ']': return Tok::RBracket;
      case ',': return Tok::Comma;
      case '!': return Tok::Bang;
      case ';': return Tok::Semi;
      case '+': return Tok::Plus;
      case '-': return Tok::Minus;
      case '*': return Tok::Star;
      case '=': return Tok::Eq;
      case '<': return next_is('=') ? Tok::Leq : Tok::Lt;
      case ':':
        if (next_is('=')) return Tok::Assign;
        if (next_is(':')) return Tok::Cons;
        break;
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Int: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::Hole: return "metavariable";
    case Tok::If: return "'if'";
    case Tok::Then: return "'then'";
    case Tok::Else: return "'else'";
    case Tok::Fi: return "'fi'";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Lambda: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Bang: return "'!'";
    case Tok::Assign: return "':='";
    case Tok::Semi: return "';'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Leq: return "'<='";
    case Tok::Lt: return "'<'";
    case Tok::Eq: return "'='";
    case Tok::Cons: return "'::'";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options)
      : toks_(std::move(tokens)), options_(options) {}

  Expr program() {
    Expr e = seq();
    expect(Tok::End);
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }
  Token expect(Tok k) {
    if (!at(k))
      fail(std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
    return take();
  }

  static Expr binop(const char* name, Expr a, Expr b) {
    return ex::app(ex::constant(extern_value(name)), std::move(a), std::move(b));
  }

  Expr seq() {
    Expr first = assign();
    if (!at(Tok::Semi)) return first;
    take();
    Expr rest = seq();
    return ex::app(ex::abs(kSeqBinder, std::move(rest)), std::move(first));
  }

  Expr assign() {
    if (at(Tok::Ident) && peek(1).kind == Tok::Assign) {
      std::string tag = take().text;
      take();
      return ex::set(std::move(tag), assign());
    }
    return cons_level();
  }

  Expr cons_level() {
    Expr head = comparison();
    if (!at(Tok::Cons)) return head;
    take();
    return binop("cons", std::move(head), cons_level());
  }

  Expr comparison() {
    Expr left = additive();
    const char* op = nullptr;
    switch (peek().kind) {
      case Tok::Leq: op = "leq"; break;
      case Tok::Lt: op = "lt"; break;
      case Tok::Eq: op = "eq"; break;
      default: return left;
    }
    take();
    return binop(op, std::move(left), additive());
  }

  Expr additive() {
    Expr left = multiplicative();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const char* op = take().kind == Tok::Plus ? "plus" : "minus";
      left = binop(op, std::move(left), multiplicative());
    }
    return left;
  }

  Expr multiplicative() {
    Expr left = application();
    while (at(Tok::Star)) {
      take();
      left = binop("times", std::move(left), application());
    }
    return left;
  }

  bool atom_start() const {
    switch (peek().kind) {
      case Tok::Int: case Tok::Ident: case Tok::Hole: case Tok::If:
      case Tok::True: case Tok::False: case Tok::Lambda: case Tok::LParen:
      case Tok::LBracket: case Tok::Bang:
        return true;
      default:
        return false;
    }
  }

  Expr application() {
    if (!atom_start()) fail(std::string("expected an expression, found ") + describe(peek().kind));
    Expr e = atom();
    while (atom_start()) e = ex::app(std::move(e), atom());
    return e;
  }

  Expr atom() {
    Token t = take();
    switch (t.kind) {
      case Tok::Int: {
        std::int64_t n = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
        if (ec != std::errc{}) throw ParseError("integer literal out of range", t.line, t.column);
        return ex::integer(n);
      }
      case Tok::True: return ex::boolean(true);
      case Tok::False: return ex::boolean(false);
      case Tok::Ident: return identifier(t.text);
      case Tok::Hole: {
        if (!options_.allow_holes)
          throw ParseError("metavariables are not allowed here", t.line, t.column);
        std::set<Ident> vars;
        for (const auto& b : scope_) vars.insert(Ident{b});
        return make_term<ExprNode>(expr::Var{make_hole("?" + t.text, vars)});
      }
      case Tok::Lambda: {
        std::string param = expect(Tok::Ident).text;
        expect(Tok::Dot);
        scope_.push_back(param);
        Expr body = seq();
        scope_.pop_back();
        return ex::abs(std::move(param), std::move(body));
      }
      case Tok::LParen: {
        Expr e = seq();
        expect(Tok::RParen);
        return e;
      }
      case Tok::If: {
        Expr c = seq();
        expect(Tok::Then);
        Expr a = seq();
        expect(Tok::Else);
        Expr b = seq();
        expect(Tok::Fi);
        return ex::if_(std::move(c), std::move(a), std::move(b));
      }
      case Tok::LBracket: {
        std::vector<Expr> items;
        if (!at(Tok::RBracket)) {
          items.push_back(seq());
          while (at(Tok::Comma)) {
            take();
            items.push_back(seq());
          }
        }
        expect(Tok::RBracket);
        Expr list = ex::constant(extern_value("nil"));
        for (auto it = items.rbegin(); it != items.rend(); ++it)
          list = binop("cons", *it, std::move(list));
        return list;
      }
      case Tok::Bang:
        return ex::get(expect(Tok::Ident).text);
      default:
        throw ParseError(std::string("unexpected ") + describe(t.kind), t.line, t.column);
    }
  }

  Expr identifier(const std::string& name) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (*it == name) return ex::var(name);
    const auto& table = registry();
    if (auto it = table.find(name); it != table.end()) return ex::constant(it->second.value);
    return ex::var(name);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  std::vector<std::string> scope_;
};

std::string print(const Expr& e) {
  return e.visit([&](const auto& n) -> std::string {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, expr::Const>) {
      const Value& v = n.value;
      if (v.is_int() && v.as_int() < 0) return "(0 - " + std::to_string(-v.as_int()) + ")";
      if (v.is_list() && v.as_list().empty()) return "nil";
      return constant_name(v);
    } else if constexpr (std::is_same_v<T, expr::Var>) {
      return is_hole(n.name) ? hole_display(n.name) : n.name.name;
    } else if constexpr (std::is_same_v<T, expr::Abs>) {
      return "(\\" + n.param.name + ". " + print(n.body) + ")";
    } else if constexpr (std::is_same_v<T, expr::App>) {
      if (auto* abs = n.fn.template as<expr::Abs>(); abs && abs->param.name == kSeqBinder)
        return "(" + print(n.arg) + "; " + print(abs->body) + ")";
      return "(" + print(n.fn) + " " + print(n.arg) + ")";
    } else if constexpr (std::is_same_v<T, expr::If>) {
      return "if " + print(n.cond) + " then " + print(n.then_branch) + " else " +
             print(n.else_branch) + " fi";
    } else if constexpr (std::is_same_v<T, expr::Get>) {
      return "!" + n.tag.name;
    } else {
      return "(" + n.tag.name + " := " + print(n.value) + ")";
    }
  });
}

}  // namespace

Expr parse(const SourceProgram& src, const ParseOptions& options) {
  Lexer lexer(src.text);
  Parser parser(lexer.run(), options);
  return parser.program();
}

Expr parse(const std::string& text) { return parse(SourceProgram{text}); }

Expr check_closed(const Expr& e) {
  auto fv = free_vars(e);
  if (fv.empty()) return e;
  std::set<std::string> names;
  for (const auto& id : fv) names.insert(id.name);
  throw FreeVariableError(std::move(names));
}

std::string to_source(const Expr& e) { return print(e); }

}  // namespace kombi
