// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <filesystem>

#include "checks.hpp"
#include "doctest.h"
#include "frontend.hpp"

using namespace kombi;

TEST_SUITE("checks") {
  TEST_CASE("compare_program") {
    for (Engine e : {Engine::FAB, Engine::C1, Engine::C2}) {
      CHECK(compare_program(parse("r := 1; !r + 1"), e, 100'000) == Agreement::Agree);
      CHECK(compare_program(parse("1 2"), e, 100'000) == Agreement::Agree);
      CHECK(compare_program(parse("(\\x. x x) (\\x. x x)"), e, 1000) == Agreement::Exhausted);
    }
  }

  TEST_CASE("generated programs agree with the classical interpreter") {
    auto path = std::filesystem::temp_directory_path() / "kombi_checks_cx.txt";
    for (Engine e : {Engine::FAB, Engine::C1, Engine::C2}) {
      CompareConfig cfg;
      cfg.samples = 150;
      cfg.counterexample_path = path.string();
      CompareReport r = compare_random(e, cfg);
      CAPTURE(engine_name(e));
      CAPTURE(r.counterexample);
      CHECK(r.samples == 150);
      CHECK(r.agree + r.disagree + r.exhausted == r.samples);
      CHECK(r.disagree == 0);
      CHECK(r.exhausted <= 8);
    }
    CHECK_FALSE(std::filesystem::exists(path));
  }

  TEST_CASE("formal elimination preserves behaviour on generated terms") {
    TheoremConfig cfg;
    cfg.samples = 150;
    TheoremReport r = theorem_random(cfg);
    CHECK(r.agree + r.disagree + r.inconclusive == 150);
    CHECK(r.disagree == 0);
  }

  TEST_CASE("combinators match their defining terms") {
    for (const char* id : {"I", "K", "S", "B", "C", "N", "SIF", "S^2", "K^2"}) {
      SoundnessReport r = check_combinator(combinator(id), 32);
      CAPTURE(id);
      CHECK(r.failures.empty());
      CHECK(r.ground >= 32);
    }
  }

  TEST_CASE("a wrong defining term is caught") {
    CombinatorDef bad = combinator("K");
    bad.defining_term = rt::abs("x", rt::abs("y", rt::var("y")));
    CHECK_FALSE(check_combinator(bad, 16).failures.empty());
    CombinatorDef swapped = combinator("C");
    swapped.defining_term = combinator("B").defining_term;
    CHECK_FALSE(check_combinator(swapped, 16).failures.empty());
  }

  TEST_CASE("pre-evaluation is invisible") {
    PreEvalReport r = pre_eval_safety(1, 100);
    CHECK(r.samples == 100);
    CHECK(r.failures.empty());
  }

  TEST_CASE("no application in a constant position") { CHECK(cbv_scan(1, 60).empty()); }
}
