// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>

#include "frontend.hpp"
#include "interp.hpp"

namespace kombi::testing {

inline constexpr Engine kAllEngines[] = {Engine::Classical, Engine::FAB, Engine::C1, Engine::C2};

inline Outcome run_text(const std::string& text, Engine engine,
                        std::uint64_t budget = 10'000'000) {
  Expr e = check_closed(parse(text));
  RunConfig cfg;
  cfg.engine = engine;
  cfg.step_budget = budget;
  cfg.initial_store = default_store(e);
  return run_program(e, cfg);
}

inline std::string value_text(const std::string& text, Engine engine) {
  Outcome o = run_text(text, engine);
  if (o.kind != Outcome::Ground && o.kind != Outcome::Function) return kind_name(o.kind);
  return to_string(o.value);
}

}  // namespace kombi::testing
