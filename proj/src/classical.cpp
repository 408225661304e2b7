// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "classical.hpp"

#include "errors.hpp"

namespace kombi {

Env env_extend(Env env, Ident name, CValue value) {
  return std::make_shared<const EnvNode>(
      EnvNode{std::move(name), std::move(value), std::move(env)});
}

const CValue& env_lookup(const Env& env, const Ident& name) {
  for (const EnvNode* n = env.get(); n; n = n->next.get())
    if (n->name == name) return n->value;
  throw UnboundVarError("unbound variable '" + name.name + "'");
}

Value Classical::lower(const CValue& v) {
  if (const Value* plain = v.value()) return *plain;
  return Value::fun([store = store_, v](const Value& arg) {
    Classical self(store);
    return self.lower(self.happ(v, CValue(arg)));
  });
}

CValue Classical::happ(const CValue& f, const CValue& v) {
  if (const Closure* c = f.closure()) {
    ExecScope::tick();
    return ceval(env_extend(c->env, c->param, v), c->body);
  }
  return apply(*f.value(), lower(v));
}

CValue Classical::ceval(const Env& env, const Expr& e) {
  return e.visit([&](const auto& n) -> CValue {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, expr::Const>) {
      return n.value;
    } else if constexpr (std::is_same_v<T, expr::Var>) {
      return env_lookup(env, n.name);
    } else if constexpr (std::is_same_v<T, expr::Abs>) {
      return std::make_shared<const Closure>(Closure{n.param, n.body, env});
    } else if constexpr (std::is_same_v<T, expr::App>) {
      CValue f = ceval(env, n.fn);
      CValue v = ceval(env, n.arg);
      return happ(f, v);
    } else if constexpr (std::is_same_v<T, expr::If>) {
      CValue c = ceval(env, n.cond);
      const Value* cond = c.value();
      if (!cond || !cond->is_bool()) throw TypeError("condition is not a boolean");
      return ceval(env, cond->as_bool() ? n.then_branch : n.else_branch);
    } else if constexpr (std::is_same_v<T, expr::Get>) {
      return store_->get(n.tag);
    } else {
      CValue v = ceval(env, n.value);
      store_->set(n.tag, lower(v));
      return v;
    }
  });
}

}  // namespace kombi
