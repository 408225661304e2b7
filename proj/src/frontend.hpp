// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>

#include "syntax.hpp"

namespace kombi {

struct SourceProgram {
  std::string text;
  std::string origin = "<inline>";
};

struct ParseOptions {
  // Accept `?name` metavariables standing for an arbitrary term over every
  // enclosing binder. Only meaningful for term-shape inspection.
  bool allow_holes = false;
};

/// Concrete syntax, loosest binding first:
///
///   e1 ; e2                  sequencing (evaluates e1, then yields e2)
///   t := e                   write reference t, yields the value written
///   a :: b                   cons (right associative)
///   a <= b, a < b, a = b     comparisons
///   a + b, a - b             additive (left associative)
///   a * b                    multiplicative (left associative)
///   f a b                    application (left associative)
///   \x. e                    abstraction, body extends as far as possible
///   if c then a else b fi    conditional
///   !t                       read reference t
///   [a, b, c]                list literal
///   42, true, false          literals; `#` starts a line comment
///
/// Free identifiers naming a registered extern become that extern constant.
/// Throws ParseError with a 1-based line and column.
Expr parse(const SourceProgram& src, const ParseOptions& options = {});
Expr parse(const std::string& text);

/// Returns `e` when it has no free variables, FreeVariableError otherwise.
Expr check_closed(const Expr& e);

/// Debug printer over the same grammar. Output is fully parenthesised and
/// reparses to an equal tree for parser-producible terms.
std::string to_source(const Expr& e);

}  // namespace kombi
