// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "eval.hpp"

namespace kombi {

Value eval(const MExpr& e) {
  if (auto* c = e.as<mexpr::Const>()) return c->value;
  auto* a = e.as<mexpr::App>();
  Value f = eval(a->fn);
  Value v = eval(a->arg);
  return apply(f, v);
}

}  // namespace kombi
