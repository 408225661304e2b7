// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

// Command-line driver over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kombi/kombi.h"

namespace {

struct Session {
  kombi_session* s = kombi_create();
  ~Session() { kombi_destroy(s); }
};

bool read_program(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

int report_error(kombi_session* s, kombi_status st) {
  std::cerr << "kombi: " << kombi_status_name(st);
  const char* msg = kombi_error_message(s);
  if (msg && *msg) std::cerr << ": " << msg;
  std::cerr << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpreter by translation to combinators"};
  app.require_subcommand(1);

  std::string algo = "c2";
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  bool no_pre_eval = false;
  bool hand_made = false;
  bool no_effects = false;
  std::string counterexample;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--algo", algo, "classical, fab, c1 or c2")
        ->check(CLI::IsMember({"classical", "fab", "c1", "c2"}))
        ->capture_default_str();
    cmd->add_option("--budget", budget, "step budget (0 for the command's default)");
    cmd->add_flag("--no-pre-eval", no_pre_eval, "disable pre-evaluation (c1, c2)");
    cmd->add_flag("--hand-made", hand_made, "use K_c, B_c, C_c and N_c for constants");
  };
  auto sampling = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "first generator seed")->capture_default_str();
    cmd->add_option("--samples", samples, "generated programs per algorithm")
        ->capture_default_str();
    cmd->add_flag("--no-effects", no_effects, "generate programs without get/set");
  };

  std::string file;
  std::string emit = "value";
  auto* run = app.add_subcommand("run", "run a program");
  common(run);
  run->add_option("file", file, "program file, or - for stdin")->required();
  run->add_option("--emit", emit, "value, trace, size or term")
      ->check(CLI::IsMember({"value", "trace", "size", "term"}))
      ->capture_default_str();

  auto* transform = app.add_subcommand("transform", "print the combinator term");
  common(transform);
  transform->add_option("file", file, "program file, or - for stdin")->required();

  auto* compare = app.add_subcommand(
      "compare", "compare with the classical interpreter (a file, or generated programs)");
  common(compare);
  sampling(compare);
  compare->add_option("file", file, "program file, or - for stdin");
  compare->add_option("--counterexample", counterexample, "write the shrunk failure here");

  auto* theorem = app.add_subcommand("theorem", "check the formal elimination on random terms");
  theorem->add_option("--budget", budget, "steps per run (0 for 100000)");
  sampling(theorem);

  std::string scale = "small";
  int reps = 1;
  bool csv = false;
  auto* bench = app.add_subcommand("bench", "run the benchmark corpus on every interpreter");
  bench->add_option("--budget", budget, "step budget (0 for 2e9)");
  bench->add_option("--scale", scale, "small, desk or large")
      ->check(CLI::IsMember({"small", "desk", "large"}))
      ->capture_default_str();
  bench->add_option("--reps", reps, "repetitions (median timing)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--csv", csv, "one record per line");

  auto* combs = app.add_subcommand("combinators", "list and check an algorithm's combinators");
  combs->add_option("--algo", algo, "fab, c1 or c2")
      ->check(CLI::IsMember({"fab", "c1", "c2"}))
      ->capture_default_str();
  combs->add_option("--seed", seed, "probe seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  Session session;
  kombi_session* s = session.s;
  if (!s) {
    std::cerr << "kombi: out of memory\n";
    return 1;
  }
  kombi_algo a = KOMBI_C2;
  kombi_parse_algo(algo.c_str(), &a);
  kombi_set_algo(s, a);
  if (budget) kombi_set_step_budget(s, budget);
  kombi_set_seed(s, seed);
  kombi_set_samples(s, samples);
  kombi_set_pre_eval(s, !no_pre_eval);
  kombi_set_hand_made(s, hand_made);
  kombi_set_effects(s, !no_effects);
  kombi_set_counterexample_path(s, counterexample.c_str());

  std::string text;
  if (!file.empty() && !read_program(file, text)) {
    std::cerr << "kombi: cannot read " << file << '\n';
    return 1;
  }

  kombi_status st = KOMBI_OK;
  if (*run) {
    if (emit == "term") {
      st = kombi_transform(s, text.c_str(), file.c_str());
      if (st != KOMBI_OK) return report_error(s, st);
      std::cout << kombi_result(s) << '\n';
      return 0;
    }
    st = kombi_run(s, text.c_str(), file.c_str());
    if (emit == "trace") std::cout << kombi_trace(s);
    if (st != KOMBI_OK) return report_error(s, st);
    if (emit == "size")
      std::cout << kombi_app_count(s) << '\n';
    else
      std::cout << kombi_result(s) << '\n';
    return 0;
  }
  if (*transform) {
    st = kombi_transform(s, text.c_str(), file.c_str());
    if (st != KOMBI_OK) return report_error(s, st);
    std::cout << kombi_result(s) << "\napplications: " << kombi_app_count(s) << '\n';
    return 0;
  }
  if (*compare)
    st = file.empty() ? kombi_compare_random(s) : kombi_compare_source(s, text.c_str(), file.c_str());
  else if (*theorem)
    st = kombi_theorem(s);
  else if (*bench)
    st = kombi_bench(s,
                     scale == "desk"    ? KOMBI_SCALE_DESK
                     : scale == "large" ? KOMBI_SCALE_LARGE
                                        : KOMBI_SCALE_SMALL,
                     reps, csv);
  else if (*combs)
    st = kombi_combinators(s);
  std::cout << kombi_result(s);
  if (st != KOMBI_OK) return report_error(s, st);
  return 0;
}
