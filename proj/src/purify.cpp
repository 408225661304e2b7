// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "purify.hpp"

#include <memory>

namespace kombi {

const Value& fun_if() {
  static const Value instance = make_curried(
      std::make_shared<const CombSig>(CombSig{"IF", 3, false}),
      [](CurriedArgs a) {
        const Value& then_branch = a[1];
        const Value& else_branch = a[2];
        then_branch.as_fun();
        else_branch.as_fun();
        return apply(a[0].as_bool() ? then_branch : else_branch, Value::dummy());
      });
  return instance;
}

bool is_fun_if(const Value& v) { return v.is_fun() && v.as_fun() == fun_if().as_fun(); }

Value make_get(const Tag& t, const StoreHandle& store) {
  auto sig = std::make_shared<const CombSig>(CombSig{"get:" + t.name, 1, false});
  return Value::fun([t, store](const Value&) { return store->get(t); }, CombMeta{sig, 0});
}

Value make_set(const Tag& t, const StoreHandle& store) {
  auto sig = std::make_shared<const CombSig>(CombSig{"set:" + t.name, 1, false});
  return Value::fun(
      [t, store](const Value& v) {
        store->set(t, v);
        return v;
      },
      CombMeta{sig, 0});
}

namespace {

const Value& getter(const Tag& t, PurifyCtx& ctx) {
  auto it = ctx.getters.find(t);
  if (it == ctx.getters.end()) it = ctx.getters.emplace(t, make_get(t, ctx.store)).first;
  return it->second;
}

const Value& setter(const Tag& t, PurifyCtx& ctx) {
  auto it = ctx.setters.find(t);
  if (it == ctx.setters.end()) it = ctx.setters.emplace(t, make_set(t, ctx.store)).first;
  return it->second;
}

}  // namespace

PExpr purify(const Expr& e, PurifyCtx& ctx) {
  return e.visit([&](const auto& n) -> PExpr {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, expr::Const>) {
      return px::constant(n.value);
    } else if constexpr (std::is_same_v<T, expr::Var>) {
      return px::var(n.name);
    } else if constexpr (std::is_same_v<T, expr::Abs>) {
      return px::abs(n.param, purify(n.body, ctx));
    } else if constexpr (std::is_same_v<T, expr::App>) {
      return px::app(purify(n.fn, ctx), purify(n.arg, ctx));
    } else if constexpr (std::is_same_v<T, expr::If>) {
      PExpr cond = purify(n.cond, ctx);
      PExpr then_thunk = px::abs(kDummyBinder, purify(n.then_branch, ctx));
      PExpr else_thunk = px::abs(kDummyBinder, purify(n.else_branch, ctx));
      return px::app(px::app(px::app(px::constant(ctx.if_const), std::move(cond)),
                             std::move(then_thunk)),
                     std::move(else_thunk));
    } else if constexpr (std::is_same_v<T, expr::Get>) {
      return px::app(px::constant(getter(n.tag, ctx)), px::constant(Value::dummy()));
    } else {
      return px::app(px::constant(setter(n.tag, ctx)), purify(n.value, ctx));
    }
  });
}

}  // namespace kombi
