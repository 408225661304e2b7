// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elim.hpp"
#include "interp.hpp"
#include "quickgen.hpp"

namespace kombi {

// Randomized cross-checks shared by the tests, the C API and the CLI.

enum class Agreement { Agree, Disagree, Exhausted };

/// Runs `program` on the classical interpreter and on `engine` from the
/// default store and compares the observations. Either side running out of
/// budget makes the comparison inconclusive.
Agreement compare_program(const Expr& program, Engine engine, std::uint64_t budget,
                          std::string* why = nullptr);

struct CompareConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::uint64_t budget = 200'000;
  // Template for the generator; the seed of sample i is `seed + i`.
  GenConfig gen;
  // Where to write the shrunk first counterexample; empty for nowhere.
  std::string counterexample_path;
};

struct CompareReport {
  std::size_t samples = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t exhausted = 0;
  std::vector<std::string> failures;
  std::string counterexample;  // surface syntax, shrunk
};

CompareReport compare_random(Engine engine, const CompareConfig& cfg);

struct TheoremConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::uint64_t budget = 100'000;
  GenConfig gen;
};

struct TheoremReport {
  std::size_t samples = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t inconclusive = 0;
  std::vector<std::string> failures;
};

/// check_theorem over generated calculus terms, each run from a store with
/// the generator's tags bound to small integers.
TheoremReport theorem_random(const TheoremConfig& cfg);

struct SoundnessReport {
  std::string comb_id;
  std::size_t tuples = 0;  // tuples compared
  std::size_t ground = 0;  // compared tuples with a ground result
  std::vector<std::string> failures;
};

/// Applies the native combinator and its defining term to the same argument
/// tuples drawn from a fixed probe battery and compares the observations (a
/// TypeError matches a stuck term). Draws until `tuples` of them reach a
/// ground result, within a bounded number of attempts.
SoundnessReport check_combinator(const CombinatorDef& def, std::size_t tuples = 64,
                                 std::uint64_t seed = 1);

struct PreEvalReport {
  std::size_t samples = 0;
  std::size_t exhausted = 0;
  std::vector<std::string> failures;
};

/// C1 with and without pre-evaluation on generated effectful programs:
/// same observations, and no store event during transformation.
PreEvalReport pre_eval_safety(std::uint64_t seed, std::size_t samples,
                              std::uint64_t budget = 200'000);

/// cbv_violations over the transforms of generated programs under every
/// algorithm, with pre-evaluation on and off. Returns one line per violation.
std::vector<std::string> cbv_scan(std::uint64_t seed, std::size_t samples);

}  // namespace kombi
