// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <map>

#include "store.hpp"
#include "syntax.hpp"

namespace kombi {

/// Binder of the thunks wrapped around conditional branches.
inline const Ident kDummyBinder{"%d"};

/// The conditional as a curried function of three arguments. Given a
/// boolean and two function-valued branches it applies the selected branch
/// to the dummy value. One process-wide instance, so rules can recognise it
/// by identity.
const Value& fun_if();
bool is_fun_if(const Value& v);

/// `(make_get t)` ignores its argument and reads t from the store.
/// `(make_set t)` writes its argument to t and returns it.
/// Both are impure: effects happen only when they are called.
Value make_get(const Tag& t, const StoreHandle& store);
Value make_set(const Tag& t, const StoreHandle& store);

struct PurifyCtx {
  StoreHandle store;
  Value if_const = fun_if();
  // One reader/writer pair per tag, created on first use.
  std::map<Tag, Value> getters;
  std::map<Tag, Value> setters;

  explicit PurifyCtx(StoreHandle s) : store(std::move(s)) {}
};

/// Rewrites conditionals into applications of the IF function to a
/// condition and two thunks, and store access into applications of the
/// per-tag reader/writer functions. Identity on the purely functional part.
PExpr purify(const Expr& e, PurifyCtx& ctx);

}  // namespace kombi
