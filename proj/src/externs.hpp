// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <map>
#include <string>

#include "value.hpp"

namespace kombi {

struct ExternDef {
  std::string name;
  Value value;
  int arity = 0;
  bool pure = true;
};

/// Library functions available to programs by name. Binary operators are
/// curried. Values are created once per process, so identities are stable.
///
///   plus minus times       int -> int -> int
///   leq lt eq              int -> int -> bool   (eq also compares booleans)
///   cons                   a -> list -> list
///   head tail isnil        list -> ...          (head/tail of nil: TypeError)
///   nil                    the empty list
///   compose                (b -> c) -> (a -> b) -> a -> c
///   filter                 (a -> bool) -> list -> list
const std::map<std::string, ExternDef>& registry();

/// The registry entry for `name`; throws std::out_of_range if missing.
const Value& extern_value(const std::string& name);

/// Higher-order composition. It only unwraps its two function arguments and
/// composes them natively; it never needs to know how they were built.
Value compose_embed();

}  // namespace kombi
