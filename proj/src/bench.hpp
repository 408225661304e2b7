// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frontend.hpp"
#include "interp.hpp"

namespace kombi {

struct CorpusParams {
  int fib_n = 10;
  int ack_m = 3;
  int ack_n = 5;
  int sort_k = 500;
  int queens = 8;

  /// Largest sizes that still run in seconds.
  static CorpusParams desk() { return {22, 3, 5, 2000, 8}; }
  /// fib 28, ack (3,6), sort 1000, queens 8.
  static CorpusParams large() { return {28, 3, 6, 1000, 8}; }
};

struct BenchProgram {
  std::string name;     // e.g. "fib-omega"
  std::string params;   // e.g. "10"
  SourceProgram source;
  // Computes the expected result without any part of the interpreter.
  std::function<Value()> oracle;
  bool imperative = false;
};

/// fib-omega, fib-imp, ack-omega, ack-imp, sort-omega, sort-imp, queens-imp.
std::vector<BenchProgram> corpus(const CorpusParams& p = {});

// Oracles, coded directly.
std::int64_t fib_oracle(int n);
std::int64_t ack_oracle(std::int64_t m, std::int64_t n);
std::int64_t queens_oracle(int n);
/// The deterministic sort input of length k.
std::vector<std::int64_t> sort_input(int k);

struct BenchRow {
  std::string program;
  Engine engine;
  std::string result;
  bool correct = false;
  std::size_t app_count = 0;
  std::uint64_t steps = 0;
  double transform_s = 0;
  double eval_s = 0;
  std::uint64_t trace_digest = 0;
  std::size_t trace_size = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // Programs where app counts are not ordered FAB >= C1 >= C2.
  std::vector<std::string> size_inversions;
  // Imperative programs whose store traces differ between engines.
  std::vector<std::string> trace_mismatches;
};

class BenchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs every program on every engine, `repetitions` times each, and keeps
/// median timings. Throws BenchFailure on the first incorrect result.
BenchReport run_bench(const std::vector<BenchProgram>& programs,
                      const std::vector<Engine>& engines, int repetitions,
                      std::uint64_t step_budget = 2'000'000'000);

/// Aligned table with speedups relative to the classical interpreter.
std::string format_table(const BenchReport& r);

/// One line per cell:
/// `program,algo,correct,app_count,steps,transform_s,eval_s`.
std::string format_records(const BenchReport& r);

}  // namespace kombi
