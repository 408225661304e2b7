// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <variant>

#include "value.hpp"

namespace kombi {

/// Identifiers starting with this prefix are reserved for the transformation
/// pipeline and never produced by the parser.
inline constexpr char kReservedPrefix = '%';

struct Ident {
  std::string name;
  auto operator<=>(const Ident&) const = default;
  bool reserved() const { return !name.empty() && name[0] == kReservedPrefix; }
};

struct Tag {
  std::string name;
  auto operator<=>(const Tag&) const = default;
};

// ---------------------------------------------------------------------------
// Terms share one shape: an immutable, shared node holding a std::variant of
// the constructors that term language allows.

template <class Node>
class Term {
 public:
  Term() = default;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node_->v);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node_->v);
  }
  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), node_->v);
  }
  const Node* get() const { return node_.get(); }
  explicit operator bool() const { return node_ != nullptr; }

 private:
  std::shared_ptr<const Node> node_;
};

// Surface language.
struct ExprNode;
using Expr = Term<ExprNode>;
namespace expr {
struct Const { Value value; };
struct Var { Ident name; };
struct Abs { Ident param; Expr body; };
struct App { Expr fn; Expr arg; };
struct If { Expr cond; Expr then_branch; Expr else_branch; };
struct Get { Tag tag; };
struct Set { Tag tag; Expr value; };
}  // namespace expr
struct ExprNode {
  std::variant<expr::Const, expr::Var, expr::Abs, expr::App, expr::If,
               expr::Get, expr::Set>
      v;
};

// Purely functional language: no conditionals, no store access.
struct PExprNode;
using PExpr = Term<PExprNode>;
namespace pexpr {
struct Const { Value value; };
struct Var { Ident name; };
struct Abs { Ident param; PExpr body; };
struct App { PExpr fn; PExpr arg; };
}  // namespace pexpr
struct PExprNode {
  std::variant<pexpr::Const, pexpr::Var, pexpr::Abs, pexpr::App> v;
};

// Minimal language: constants and applications only.
struct MExprNode;
using MExpr = Term<MExprNode>;
namespace mexpr {
struct Const { Value value; };
struct App { MExpr fn; MExpr arg; };
}  // namespace mexpr
struct MExprNode {
  std::variant<mexpr::Const, mexpr::App> v;
};

template <class Node, class Alt>
Term<Node> make_term(Alt alt) {
  return Term<Node>(std::make_shared<const Node>(Node{std::move(alt)}));
}

namespace ex {
Expr constant(Value v);
Expr var(std::string name);
Expr abs(std::string param, Expr body);
Expr app(Expr fn, Expr arg);
Expr app(Expr fn, Expr a, Expr b);
Expr if_(Expr c, Expr t, Expr e);
Expr get(std::string tag);
Expr set(std::string tag, Expr value);
Expr integer(std::int64_t n);
Expr boolean(bool b);
}  // namespace ex

namespace px {
PExpr constant(Value v);
PExpr var(std::string name);
PExpr var(Ident name);
PExpr abs(Ident param, PExpr body);
PExpr abs(std::string param, PExpr body);
PExpr app(PExpr fn, PExpr arg);
}  // namespace px

namespace mx {
MExpr constant(Value v);
MExpr app(MExpr fn, MExpr arg);
}  // namespace mx

/// Number of application nodes.
std::size_t count_apps(const PExpr& e);
std::size_t count_apps(const MExpr& e);

/// Number of leaves (constants and variables).
std::size_t count_leaves(const PExpr& e);
std::size_t count_leaves(const MExpr& e);

std::set<Ident> free_vars(const Expr& e);
std::set<Ident> free_vars(const PExpr& e);

bool occurs_free(const Ident& x, const PExpr& e);

// ---------------------------------------------------------------------------
// Schematic holes: a reserved variable standing for an arbitrary term over a
// known set of variables. The eliminator keeps holes as opaque leaves so the
// shape a rule produces can be measured independently of the subterms.

inline constexpr const char* kHolePrefix = "%?";

Ident make_hole(const std::string& display, const std::set<Ident>& vars);
bool is_hole(const Ident& id);
std::set<Ident> hole_vars(const Ident& id);
std::string hole_display(const Ident& id);

/// Structural equality; constants compare with value_ground_eq, so function
/// constants compare by identity.
bool expr_equal(const Expr& a, const Expr& b);
bool expr_equal(const PExpr& a, const PExpr& b);
bool expr_equal(const MExpr& a, const MExpr& b);

/// Name used when printing a constant in combinator notation: the comb_id of
/// an unapplied native function, `⟨id+k⟩` for one that already absorbed k
/// arguments, or the value text otherwise.
std::string constant_name(const Value& v);

/// Fully parenthesised combinator notation, e.g. `((S I) I)`.
std::string to_term_string(const PExpr& e);
std::string to_term_string(const MExpr& e);

}  // namespace kombi
