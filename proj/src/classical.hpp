// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <memory>
#include <variant>

#include "store.hpp"
#include "syntax.hpp"

namespace kombi {

struct Closure;
struct EnvNode;

/// Environments are persistent association lists, so a closure captures a
/// snapshot simply by holding the list head.
using Env = std::shared_ptr<const EnvNode>;

/// A value of the classical interpreter: either a plain runtime value
/// (including native functions) or an interpreted closure.
struct CValue {
  std::variant<Value, std::shared_ptr<const Closure>> rep;

  CValue() = default;
  CValue(Value v) : rep(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  CValue(std::shared_ptr<const Closure> c) : rep(std::move(c)) {}  // NOLINT

  bool is_closure() const { return rep.index() == 1; }
  const Value* value() const { return std::get_if<Value>(&rep); }
  const Closure* closure() const {
    auto* p = std::get_if<std::shared_ptr<const Closure>>(&rep);
    return p ? p->get() : nullptr;
  }
};

struct Closure {
  Ident param;
  Expr body;
  Env env;
};

struct EnvNode {
  Ident name;
  CValue value;
  Env next;
};

Env env_extend(Env env, Ident name, CValue value);
/// Throws UnboundVarError.
const CValue& env_lookup(const Env& env, const Ident& name);

/// Environment/closure evaluator over surface syntax. Applications evaluate
/// the operator, then the operand, then dispatch on the kind of function.
/// Native functions receiving a closure get it wrapped as a native function
/// that re-enters this interpreter, which is the only glue the two kinds of
/// function need.
class Classical {
 public:
  explicit Classical(StoreHandle store) : store_(std::move(store)) {}

  CValue ceval(const Env& env, const Expr& e);
  CValue happ(const CValue& f, const CValue& v);

  /// Closures become native functions; plain values pass through.
  Value lower(const CValue& v);

  Store& store() { return *store_; }

 private:
  StoreHandle store_;
};

}  // namespace kombi
