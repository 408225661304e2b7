// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "frontend.hpp"
#include "quickgen.hpp"

using namespace kombi;

namespace {

std::size_t size(const Expr& e) {
  std::size_t n = 1;
  if (auto* a = e.as<expr::Abs>()) n += size(a->body);
  if (auto* a = e.as<expr::App>()) n += size(a->fn) + size(a->arg);
  if (auto* i = e.as<expr::If>()) n += size(i->cond) + size(i->then_branch) + size(i->else_branch);
  if (auto* s = e.as<expr::Set>()) n += size(s->value);
  return n;
}

bool has_set(const Expr& e) {
  if (e.is<expr::Set>()) return true;
  if (auto* a = e.as<expr::Abs>()) return has_set(a->body);
  if (auto* a = e.as<expr::App>()) return has_set(a->fn) || has_set(a->arg);
  if (auto* i = e.as<expr::If>())
    return has_set(i->cond) || has_set(i->then_branch) || has_set(i->else_branch);
  return false;
}

bool has_effect(const Expr& e) {
  if (e.is<expr::Set>() || e.is<expr::Get>()) return true;
  if (auto* a = e.as<expr::Abs>()) return has_effect(a->body);
  if (auto* a = e.as<expr::App>()) return has_effect(a->fn) || has_effect(a->arg);
  if (auto* i = e.as<expr::If>())
    return has_effect(i->cond) || has_effect(i->then_branch) || has_effect(i->else_branch);
  return false;
}

}  // namespace

TEST_SUITE("quickgen") {
  TEST_CASE("a pure function of the configuration") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      CHECK(expr_equal(gen_expr(cfg), gen_expr(cfg)));
      CHECK(rterm_equal(gen_rterm(cfg), gen_rterm(cfg)));
    }
    GenConfig a, b;
    b.seed = 2;
    CHECK_FALSE(expr_equal(gen_expr(a), gen_expr(b)));
  }

  TEST_CASE("programs are closed at every depth") {
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.max_depth = 8;
      CHECK(free_vars(gen_expr(cfg)).empty());
    }
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      CHECK(is_closed(gen_rterm(cfg)));
    }
  }

  TEST_CASE("depth zero gives a literal") {
    GenConfig cfg;
    cfg.max_depth = 0;
    CHECK(gen_expr(cfg).is<expr::Const>());
  }

  TEST_CASE("weights must sum to one") {
    GenConfig cfg;
    CHECK(cfg.weights.sum() == doctest::Approx(1.0));
    cfg.weights.leaf += 0.5;
    CHECK_THROWS_AS(gen_expr(cfg), std::invalid_argument);
  }

  TEST_CASE("effects can be switched off") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.allow_effects = false;
      CHECK_FALSE(has_effect(gen_expr(cfg)));
    }
  }

  TEST_CASE("tags") {
    GenConfig cfg;
    cfg.tag_pool = 2;
    CHECK(gen_tags(cfg) == std::vector<std::string>{"r0", "r1"});
  }

  TEST_CASE("translation to the calculus") {
    Expr e = parse("if 1 <= 2 then r0 := 3 else !r0 fi");
    RTerm t = to_rterm(e);
    CHECK(is_closed(t));
    DeltaTable d = default_delta({"r0"});
    RunOutcome o = run(t, RStore({{Tag{"r0"}, rt::integer(0)}}), d, 1000);
    REQUIRE(o.kind == RunOutcome::Value);
    CHECK(observe(o.term) == "3");
    CHECK_THROWS_AS(to_rterm(parse("nil")), std::invalid_argument);
  }

  TEST_CASE("shrinking keeps the failure and never grows") {
    int shrunk = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      Expr e = gen_expr(cfg);
      if (!has_set(e)) continue;
      Expr s = shrink(e, has_set);
      CHECK(has_set(s));
      CHECK(free_vars(s).empty());
      CHECK(size(s) <= size(e));
      // The smallest program with a write is `t := c`.
      CHECK(size(s) == 2);
      ++shrunk;
    }
    CHECK(shrunk > 10);
  }

  TEST_CASE("counterexamples are written as reparsable source") {
    auto path = std::filesystem::temp_directory_path() / "kombi_counterexample_test.txt";
    Expr e = parse("(\\x. x + 1) 2");
    REQUIRE(write_counterexample(path.string(), e, "note"));
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(expr_equal(parse(buf.str()), e));
    std::filesystem::remove(path);
    CHECK_FALSE(write_counterexample("/nonexistent/dir/file", e, ""));
  }
}
