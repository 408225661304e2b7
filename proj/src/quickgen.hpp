// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "refsem.hpp"
#include "syntax.hpp"

namespace kombi {

/// Relative frequency of each kind of node; must sum to 1.
struct GenWeights {
  double leaf = 0.20;
  double op = 0.22;        // externs: arithmetic, comparison, lists
  double app = 0.15;       // applications of function-typed terms
  double binder = 0.10;    // immediately applied abstractions, sequencing
  double cond = 0.12;
  double effect = 0.13;    // get / set
  double skeleton = 0.08;  // known shapes: twice, omega recursion, compose

  double sum() const { return leaf + op + app + binder + cond + effect + skeleton; }
};

struct GenConfig {
  std::uint64_t seed = 1;
  int max_depth = 6;
  int var_pool = 4;
  int tag_pool = 3;
  GenWeights weights;
  bool allow_effects = true;
  // Lists and higher-order externs (filter, compose).
  bool allow_library = true;
  // Chance of replacing a node by a term of the wrong type.
  double noise = 0.03;
  // Chance of a divergent term (applied omega) at a node.
  double diverge = 0.0001;
};

/// A closed program, a pure function of `cfg`. Throws std::invalid_argument
/// when the weights do not sum to 1.
Expr gen_expr(const GenConfig& cfg);

/// A closed term for the reference semantics over the default delta table
/// with tags r0..r<tag_pool-1>. Library externs are never generated.
RTerm gen_rterm(const GenConfig& cfg);

/// Translation used by gen_rterm: conditionals become SEL over thunks,
/// store access becomes get:t / set:t. Throws std::invalid_argument on
/// constants that have no delta entry.
RTerm to_rterm(const Expr& e);

/// Tag names the generator uses.
std::vector<std::string> gen_tags(const GenConfig& cfg);

/// Greedily replaces subterms by smaller closed ones while `fails` keeps
/// holding.
Expr shrink(const Expr& e, const std::function<bool(const Expr&)>& fails,
            int max_rounds = 200);

/// Writes `e` as surface syntax; returns false on I/O failure.
bool write_counterexample(const std::string& path, const Expr& e, const std::string& note);

}  // namespace kombi
