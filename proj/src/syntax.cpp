// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "syntax.hpp"

#include <functional>
#include <utility>

namespace kombi {

namespace ex {
Expr constant(Value v) { return make_term<ExprNode>(expr::Const{std::move(v)}); }
Expr var(std::string name) {
  return make_term<ExprNode>(expr::Var{Ident{std::move(name)}});
}
Expr abs(std::string param, Expr body) {
  return make_term<ExprNode>(expr::Abs{Ident{std::move(param)}, std::move(body)});
}
Expr app(Expr fn, Expr arg) {
  return make_term<ExprNode>(expr::App{std::move(fn), std::move(arg)});
}
Expr app(Expr fn, Expr a, Expr b) { return app(app(std::move(fn), std::move(a)), std::move(b)); }
Expr if_(Expr c, Expr t, Expr e) {
  return make_term<ExprNode>(expr::If{std::move(c), std::move(t), std::move(e)});
}
Expr get(std::string tag) { return make_term<ExprNode>(expr::Get{Tag{std::move(tag)}}); }
Expr set(std::string tag, Expr value) {
  return make_term<ExprNode>(expr::Set{Tag{std::move(tag)}, std::move(value)});
}
Expr integer(std::int64_t n) { return constant(Value::integer(n)); }
Expr boolean(bool b) { return constant(Value::boolean(b)); }
}  // namespace ex

namespace px {
PExpr constant(Value v) { return make_term<PExprNode>(pexpr::Const{std::move(v)}); }
PExpr var(std::string name) { return var(Ident{std::move(name)}); }
PExpr var(Ident name) { return make_term<PExprNode>(pexpr::Var{std::move(name)}); }
PExpr abs(Ident param, PExpr body) {
  return make_term<PExprNode>(pexpr::Abs{std::move(param), std::move(body)});
}
PExpr abs(std::string param, PExpr body) {
  return abs(Ident{std::move(param)}, std::move(body));
}
PExpr app(PExpr fn, PExpr arg) {
  return make_term<PExprNode>(pexpr::App{std::move(fn), std::move(arg)});
}
}  // namespace px

namespace mx {
MExpr constant(Value v) { return make_term<MExprNode>(mexpr::Const{std::move(v)}); }
MExpr app(MExpr fn, MExpr arg) {
  return make_term<MExprNode>(mexpr::App{std::move(fn), std::move(arg)});
}
}  // namespace mx

std::size_t count_apps(const PExpr& e) {
  if (auto* a = e.as<pexpr::App>()) return 1 + count_apps(a->fn) + count_apps(a->arg);
  if (auto* a = e.as<pexpr::Abs>()) return count_apps(a->body);
  return 0;
}

std::size_t count_apps(const MExpr& e) {
  if (auto* a = e.as<mexpr::App>()) return 1 + count_apps(a->fn) + count_apps(a->arg);
  return 0;
}

std::size_t count_leaves(const PExpr& e) {
  if (auto* a = e.as<pexpr::App>()) return count_leaves(a->fn) + count_leaves(a->arg);
  if (auto* a = e.as<pexpr::Abs>()) return count_leaves(a->body);
  return 1;
}

std::size_t count_leaves(const MExpr& e) {
  if (auto* a = e.as<mexpr::App>()) return count_leaves(a->fn) + count_leaves(a->arg);
  return 1;
}

namespace {

void collect(const Expr& e, std::set<Ident>& bound, std::set<Ident>& out) {
  e.visit([&](const auto& n) {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, expr::Var>) {
      if (!bound.count(n.name)) out.insert(n.name);
    } else if constexpr (std::is_same_v<T, expr::Abs>) {
      bool fresh = bound.insert(n.param).second;
      collect(n.body, bound, out);
      if (fresh) bound.erase(n.param);
    } else if constexpr (std::is_same_v<T, expr::App>) {
      collect(n.fn, bound, out);
      collect(n.arg, bound, out);
    } else if constexpr (std::is_same_v<T, expr::If>) {
      collect(n.cond, bound, out);
      collect(n.then_branch, bound, out);
      collect(n.else_branch, bound, out);
    } else if constexpr (std::is_same_v<T, expr::Set>) {
      collect(n.value, bound, out);
    }
  });
}

void collect(const PExpr& e, std::set<Ident>& bound, std::set<Ident>& out) {
  if (auto* v = e.as<pexpr::Var>()) {
    if (!bound.count(v->name)) out.insert(v->name);
  } else if (auto* a = e.as<pexpr::Abs>()) {
    bool fresh = bound.insert(a->param).second;
    collect(a->body, bound, out);
    if (fresh) bound.erase(a->param);
  } else if (auto* a = e.as<pexpr::App>()) {
    collect(a->fn, bound, out);
    collect(a->arg, bound, out);
  }
}

}  // namespace

std::set<Ident> free_vars(const Expr& e) {
  std::set<Ident> bound, out;
  collect(e, bound, out);
  return out;
}

std::set<Ident> free_vars(const PExpr& e) {
  std::set<Ident> bound, out;
  collect(e, bound, out);
  return out;
}

bool occurs_free(const Ident& x, const PExpr& e) {
  if (auto* v = e.as<pexpr::Var>()) return v->name == x;
  if (auto* a = e.as<pexpr::Abs>()) return a->param != x && occurs_free(x, a->body);
  if (auto* a = e.as<pexpr::App>()) return occurs_free(x, a->fn) || occurs_free(x, a->arg);
  return false;
}

Ident make_hole(const std::string& display, const std::set<Ident>& vars) {
  std::string name = kHolePrefix + display + "@";
  bool first = true;
  for (const auto& v : vars) {
    if (!first) name += ",";
    first = false;
    name += v.name;
  }
  return Ident{name};
}

bool is_hole(const Ident& id) { return id.name.rfind(kHolePrefix, 0) == 0; }

std::set<Ident> hole_vars(const Ident& id) {
  std::set<Ident> out;
  auto at = id.name.rfind('@');
  if (at == std::string::npos) return out;
  std::string rest = id.name.substr(at + 1);
  std::size_t start = 0;
  while (start < rest.size()) {
    auto comma = rest.find(',', start);
    if (comma == std::string::npos) comma = rest.size();
    out.insert(Ident{rest.substr(start, comma - start)});
    start = comma + 1;
  }
  return out;
}

std::string hole_display(const Ident& id) {
  auto at = id.name.rfind('@');
  return id.name.substr(2, at == std::string::npos ? std::string::npos : at - 2);
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return true;
  if (a.get()->v.index() != b.get()->v.index()) return false;
  return a.visit([&](const auto& x) -> bool {
    using T = std::decay_t<decltype(x)>;
    const T& y = *b.as<T>();
    if constexpr (std::is_same_v<T, expr::Const>) {
      return value_ground_eq(x.value, y.value);
    } else if constexpr (std::is_same_v<T, expr::Var>) {
      return x.name == y.name;
    } else if constexpr (std::is_same_v<T, expr::Abs>) {
      return x.param == y.param && expr_equal(x.body, y.body);
    } else if constexpr (std::is_same_v<T, expr::App>) {
      return expr_equal(x.fn, y.fn) && expr_equal(x.arg, y.arg);
    } else if constexpr (std::is_same_v<T, expr::If>) {
      return expr_equal(x.cond, y.cond) && expr_equal(x.then_branch, y.then_branch) &&
             expr_equal(x.else_branch, y.else_branch);
    } else if constexpr (std::is_same_v<T, expr::Get>) {
      return x.tag == y.tag;
    } else {
      return x.tag == y.tag && expr_equal(x.value, y.value);
    }
  });
}

bool expr_equal(const PExpr& a, const PExpr& b) {
  if (a.get() == b.get()) return true;
  if (auto* x = a.as<pexpr::Const>()) {
    auto* y = b.as<pexpr::Const>();
    return y && value_ground_eq(x->value, y->value);
  }
  if (auto* x = a.as<pexpr::Var>()) {
    auto* y = b.as<pexpr::Var>();
    return y && x->name == y->name;
  }
  if (auto* x = a.as<pexpr::Abs>()) {
    auto* y = b.as<pexpr::Abs>();
    return y && x->param == y->param && expr_equal(x->body, y->body);
  }
  auto* x = a.as<pexpr::App>();
  auto* y = b.as<pexpr::App>();
  return y && expr_equal(x->fn, y->fn) && expr_equal(x->arg, y->arg);
}

bool expr_equal(const MExpr& a, const MExpr& b) {
  if (a.get() == b.get()) return true;
  if (auto* x = a.as<mexpr::Const>()) {
    auto* y = b.as<mexpr::Const>();
    return y && value_ground_eq(x->value, y->value);
  }
  auto* x = a.as<mexpr::App>();
  auto* y = b.as<mexpr::App>();
  return y && expr_equal(x->fn, y->fn) && expr_equal(x->arg, y->arg);
}

std::string constant_name(const Value& v) {
  if (const auto& meta = v.meta()) {
    if (meta->args_seen == 0) return meta->comb_id();
    return "\u27e8" + meta->comb_id() + "+" + std::to_string(meta->args_seen) + "\u27e9";
  }
  return to_string(v);
}

std::string to_term_string(const PExpr& e) {
  if (auto* c = e.as<pexpr::Const>()) return constant_name(c->value);
  if (auto* v = e.as<pexpr::Var>())
    return is_hole(v->name) ? hole_display(v->name) : v->name.name;
  if (auto* a = e.as<pexpr::Abs>())
    return "(\\" + a->param.name + ". " + to_term_string(a->body) + ")";
  auto* a = e.as<pexpr::App>();
  return "(" + to_term_string(a->fn) + " " + to_term_string(a->arg) + ")";
}

std::string to_term_string(const MExpr& e) {
  if (auto* c = e.as<mexpr::Const>()) return constant_name(c->value);
  auto* a = e.as<mexpr::App>();
  return "(" + to_term_string(a->fn) + " " + to_term_string(a->arg) + ")";
}

}  // namespace kombi
