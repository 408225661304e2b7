// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "refsem.hpp"

using namespace kombi;

namespace {

// Nameless form: bound variables become their binder depth, free ones keep
// their name. Alpha-equivalent terms print the same.
std::string debruijn(const RTerm& m, std::vector<std::string>& scope) {
  if (auto* v = m.as<rterm::Var>()) {
    for (std::size_t i = scope.size(); i-- > 0;)
      if (scope[i] == v->name.name) return "#" + std::to_string(scope.size() - 1 - i);
    return v->name.name;
  }
  if (auto* a = m.as<rterm::Abs>()) {
    scope.push_back(a->param.name);
    std::string body = debruijn(a->body, scope);
    scope.pop_back();
    return "(L " + body + ")";
  }
  if (auto* a = m.as<rterm::App>())
    return "(" + debruijn(a->fn, scope) + " " + debruijn(a->arg, scope) + ")";
  return to_string(m);
}

std::string debruijn(const RTerm& m) {
  std::vector<std::string> scope;
  return debruijn(m, scope);
}

// Renames every binder to a fresh name, after which substitution cannot
// capture and may be done naively.
RTerm freshen(const RTerm& m, std::vector<std::pair<std::string, std::string>>& scope, int& next) {
  if (auto* v = m.as<rterm::Var>()) {
    for (std::size_t i = scope.size(); i-- > 0;)
      if (scope[i].first == v->name.name) return rt::var(scope[i].second);
    return m;
  }
  if (auto* a = m.as<rterm::Abs>()) {
    std::string fresh = "_b" + std::to_string(next++);
    scope.emplace_back(a->param.name, fresh);
    RTerm body = freshen(a->body, scope, next);
    scope.pop_back();
    return rt::abs(fresh, body);
  }
  if (auto* a = m.as<rterm::App>())
    return rt::app(freshen(a->fn, scope, next), freshen(a->arg, scope, next));
  return m;
}

RTerm naive_subst(const std::string& x, const RTerm& v, const RTerm& m) {
  if (auto* y = m.as<rterm::Var>()) return y->name.name == x ? v : m;
  if (auto* a = m.as<rterm::Abs>()) return rt::abs(a->param, naive_subst(x, v, a->body));
  if (auto* a = m.as<rterm::App>()) return rt::app(naive_subst(x, v, a->fn), naive_subst(x, v, a->arg));
  return m;
}

RTerm random_term(std::mt19937_64& rng, int depth) {
  static const char* names[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  switch (pick(rng)) {
    case 0: return rt::var(names[rng() % 3]);
    case 1: return rt::integer(static_cast<std::int64_t>(rng() % 5));
    case 2:
    case 3: return rt::abs(names[rng() % 3], random_term(rng, depth - 1));
    default: return rt::app(random_term(rng, depth - 1), random_term(rng, depth - 1));
  }
}

RTerm I(std::int64_t n) { return rt::integer(n); }

}  // namespace

TEST_SUITE("refsem") {
  TEST_CASE("substitution agrees with a capture-free oracle") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
      RTerm m = random_term(rng, 5);
      RTerm v = random_term(rng, 3);
      std::vector<std::pair<std::string, std::string>> scope;
      int next = 0;
      RTerm want = naive_subst("x", v, freshen(m, scope, next));
      RTerm got = subst(Ident{"x"}, v, m);
      CAPTURE(to_string(m));
      CAPTURE(to_string(v));
      CHECK(debruijn(got) == debruijn(want));
    }
  }

  TEST_CASE("substitution avoids capture") {
    // [y/x](λy.x) must not become λy.y.
    RTerm got = subst(Ident{"x"}, rt::var("y"), rt::abs("y", rt::var("x")));
    CHECK(debruijn(got) == "(L y)");
  }

  TEST_CASE("values") {
    CHECK(is_value(rt::var("x")));
    CHECK(is_value(rt::abs("x", rt::app(rt::var("x"), rt::var("x")))));
    CHECK(is_value(I(3)));
    CHECK_FALSE(is_value(rt::app(comb_I(), I(3))));
    CHECK(is_closed(comb_S()));
    CHECK_FALSE(is_closed(rt::abs("x", rt::var("y"))));
    CHECK(term_size(rt::app(rt::var("f"), I(1))) == 3);
  }

  TEST_CASE("single steps") {
    DeltaTable d = default_delta({"r"});
    RStore s({{Tag{"r"}, I(0)}});
    RTerm m = rt::app(comb_I(), I(3));
    CHECK(step(m, s, d) == StepResult::Stepped);
    CHECK(to_string(m) == "3");
    CHECK(step(m, s, d) == StepResult::Value);
    RTerm bad = rt::app(I(3), I(4));
    CHECK(step(bad, s, d) == StepResult::Stuck);
    // Operator first: the effect in the operator happens before the one in
    // the operand.
    RTerm order = rt::app(rt::app(rt::sym("set:r"), I(1)), rt::app(rt::sym("set:r"), I(2)));
    RunOutcome r = run(order, s, d, 100);
    CHECK(r.kind == RunOutcome::Stuck);  // 1 applied to 2
    auto lines = trace_lines(r.store, [](const RTerm& v) { return observe(v); });
    CHECK(lines == std::vector<std::string>{"SET r 1", "SET r 2"});
  }

  TEST_CASE("delta rules") {
    DeltaTable d = default_delta({"r"});
    RStore s({{Tag{"r"}, I(5)}});
    auto value = [&](RTerm m) {
      RunOutcome o = run(std::move(m), s, d, 1000);
      REQUIRE(o.kind == RunOutcome::Value);
      return observe(o.term);
    };
    CHECK(value(rt::app(rt::sym("plus"), I(2), I(3))) == "5");
    CHECK(value(rt::app(rt::sym("leq"), I(2), I(3))) == "true");
    CHECK(value(rt::app(rt::sym("eq"), rt::boolean(false), rt::boolean(false))) == "true");
    CHECK(value(rt::app(rt::sym("SEL"), rt::boolean(false), I(1), I(2))) == "2");
    CHECK(value(rt::app(rt::sym("get:r"), rt::dummy())) == "5");
    CHECK(value(rt::app(rt::sym("plus"), I(2))) == "<fun>");
    CHECK(run(rt::app(rt::sym("plus"), rt::boolean(true), I(3)), s, d, 100).kind ==
          RunOutcome::Stuck);
  }

  TEST_CASE("divergence times out") {
    RTerm w = rt::abs("x", rt::app(rt::var("x"), rt::var("x")));
    RunOutcome o = run(rt::app(w, w), RStore{}, default_delta(), 5000);
    CHECK(o.kind == RunOutcome::Timeout);
    CHECK(o.steps == 5000);
  }

  TEST_CASE("formal elimination") {
    CHECK(rterm_equal(celim(rt::abs("x", rt::var("x"))), comb_I()));
    CHECK(rterm_equal(celim(rt::abs("x", I(1))), rt::app(comb_K(), I(1))));
    RTerm sii = rt::app(rt::app(comb_S(), comb_I()), comb_I());
    CHECK(rterm_equal(celim(rt::abs("x", rt::app(rt::var("x"), rt::var("x")))), sii));
    // No abstraction survives except inside the combinators themselves.
    RTerm m = rt::abs("f", rt::abs("x", rt::app(rt::var("f"), rt::app(rt::var("f"), rt::var("x")))));
    RTerm c = celim(m);
    CHECK(is_closed(c));
    DeltaTable d = default_delta();
    RTerm inc = rt::app(rt::sym("plus"), I(1));
    RunOutcome o = run(rt::app(c, inc, I(5)), RStore{}, d, 10000);
    CHECK(observe(o.term) == "7");
  }

  TEST_CASE("check_theorem on hand-written terms") {
    DeltaTable d = default_delta({"r"});
    RStore s({{Tag{"r"}, I(0)}});
    RTerm w = rt::abs("x", rt::app(rt::var("x"), rt::var("x")));
    std::vector<RTerm> terms = {
        rt::app(rt::abs("x", rt::app(rt::sym("plus"), rt::var("x"), I(1))), I(4)),
        rt::abs("x", rt::app(rt::sym("set:r"), rt::var("x"))),
        // The effect must stay under the binder.
        rt::app(rt::abs("y", I(1)), rt::abs("x", rt::app(rt::sym("set:r"), I(9)))),
        rt::app(w, w),
        rt::app(I(1), I(2)),
    };
    for (const auto& t : terms) {
      CAPTURE(to_string(t));
      Verdict v = check_theorem(t, s, d, 10000);
      CHECK(v.kind == Verdict::Agree);
    }
  }
}
