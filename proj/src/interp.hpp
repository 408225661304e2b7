// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "elim.hpp"
#include "store.hpp"
#include "syntax.hpp"

namespace kombi {

enum class Engine { Classical, FAB, C1, C2 };

const char* engine_name(Engine e);
std::optional<Engine> parse_engine(const std::string& name);
ElimAlgo engine_algo(Engine e);  // not for Classical

struct RunConfig {
  Engine engine = Engine::C2;
  std::uint64_t step_budget = 50'000'000;
  // Elimination options for the combinator engines; `algo` is taken from
  // `engine`.
  bool pre_eval = true;
  bool hand_made = false;
  Store::Bindings initial_store;
  // Keep the rendered trace lines; the digest is always computed.
  bool keep_trace = true;
};

/// Observable result of running a closed program.
struct Outcome {
  enum Kind { Ground, Function, TypeError, UnboundTag, UnboundVar, StepLimit, Unexpected };
  Kind kind = Ground;
  Value value;
  std::string message;
  std::vector<std::string> trace;
  std::size_t trace_size = 0;
  std::uint64_t trace_digest = 0;
  std::map<std::string, std::string> store;
  std::uint64_t steps = 0;
  // Combinator engines only.
  std::size_t app_count = 0;
  std::size_t transform_events = 0;
  MExpr term;
  double transform_s = 0;
  double eval_s = 0;
};

const char* kind_name(Outcome::Kind k);

/// Runs a closed program on one engine. Evaluation happens on a large
/// stack; errors become outcome kinds.
Outcome run_program(const Expr& program, const RunConfig& cfg);

/// purify then transform with fresh store (for inspection only: the store
/// is discarded, so effectful constants in the result are not runnable).
MExpr compile(const Expr& program, const ElimOptions& opts);

/// Whether two outcomes are indistinguishable: same kind, equal ground
/// values, equal traces and final stores. Functions match by kind only and
/// error messages are ignored.
bool same_observation(const Outcome& a, const Outcome& b, std::string* why = nullptr);

/// Text summary: value or error kind, then the trace.
std::string describe(const Outcome& o);

/// Every tag the program mentions, bound to 0.
Store::Bindings default_store(const Expr& program);

}  // namespace kombi
