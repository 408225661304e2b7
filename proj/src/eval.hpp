// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "syntax.hpp"

namespace kombi {

/// Evaluates a minimal term. There is one kind of application and the host
/// performs it: the operator is evaluated, then the operand, then the
/// native function is called. Budgets come from the enclosing ExecScope.
Value eval(const MExpr& e);

}  // namespace kombi
