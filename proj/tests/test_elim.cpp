// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <memory>
#include <set>

#include "doctest.h"
#include "elim.hpp"
#include "errors.hpp"
#include "eval.hpp"
#include "externs.hpp"
#include "frontend.hpp"
#include "interp.hpp"
#include "purify.hpp"
#include "quickgen.hpp"

using namespace kombi;

namespace {

PExpr pure_of(const std::string& text) {
  ParseOptions po;
  po.allow_holes = true;
  PurifyCtx ctx(std::make_shared<Store>());
  return purify(parse(SourceProgram{text, "<test>"}, po), ctx);
}

PExpr elim_text(const std::string& text, ElimAlgo algo, bool pre_eval) {
  ElimOptions o;
  o.algo = algo;
  o.pre_eval = pre_eval;
  return elim(pure_of(text), o);
}

std::string shape(const std::string& text, ElimAlgo algo, bool pre_eval) {
  return to_term_string(elim_text(text, algo, pre_eval));
}

std::size_t apps(const std::string& text, ElimAlgo algo, bool pre_eval) {
  return count_apps(elim_text(text, algo, pre_eval));
}

PExpr c(const std::string& id) { return px::constant(combinator(id).value); }
PExpr n(std::int64_t v) { return px::constant(Value::integer(v)); }

}  // namespace

TEST_SUITE("elim") {
  TEST_CASE("basic rules") {
    for (ElimAlgo a : {ElimAlgo::FAB, ElimAlgo::C1, ElimAlgo::C2})
      CHECK(shape("\\x. x", a, false) == "I");
    CHECK(shape("\\x. 42", ElimAlgo::FAB, false) == "(K 42)");
    CHECK(shape("\\x. x x", ElimAlgo::FAB, false) == "((S I) I)");
    CHECK(shape("\\x. \\y. y", ElimAlgo::FAB, false) == "(K I)");
    CHECK(shape("\\x. \\y. x", ElimAlgo::FAB, false) == "((S (K K)) I)");
    // An abstraction whose variable is unused, over an application: the
    // application stays guarded under S rather than moving under K.
    CHECK(shape("\\x. plus 1 2", ElimAlgo::FAB, false) ==
          "((S ((S (K plus)) (K 1))) (K 2))");
  }

  TEST_CASE("FAB on a two-variable application") {
    // λy.(x y) is S (K x) I; abstracting x again applies (b) twice more.
    CHECK(shape("\\x. \\y. x y", ElimAlgo::FAB, false) ==
          "((S ((S (K S)) ((S (K K)) I))) (K I))");
    CHECK(apps("\\x. \\y. x y", ElimAlgo::FAB, false) == 9);
  }

  TEST_CASE("multiple abstractions over an application") {
    const char* t = "\\x. \\y. ?M ?N";
    CHECK(shape(t, ElimAlgo::FAB, false) == "((S ((S (K S)) [\\x.[\\y.?M]])) [\\x.[\\y.?N]])");
    CHECK(apps(t, ElimAlgo::FAB, false) == 5);
    CHECK(shape(t, ElimAlgo::C2, true) == "((S^2 [\\x.[\\y.?M]]) [\\x.[\\y.?N]])");
    CHECK(apps(t, ElimAlgo::C2, true) == 2);
    CHECK(apps(t, ElimAlgo::C2, false) == 2);
    CHECK(apps(t, ElimAlgo::C1, false) == 4);
  }

  TEST_CASE("one abstraction over multiple applications") {
    const char* t = "\\x. ?A ?B ?C";
    CHECK(shape(t, ElimAlgo::FAB, false) == "((S ((S [\\x.?A]) [\\x.?B])) [\\x.?C])");
    CHECK(apps(t, ElimAlgo::FAB, false) == 4);
    CHECK(shape(t, ElimAlgo::C2, false) == "(((S2 [\\x.?A]) [\\x.?B]) [\\x.?C])");
    CHECK(apps(t, ElimAlgo::C2, false) == 3);
    CHECK(apps("\\x. \\y. ?A ?B ?C", ElimAlgo::C2, false) == 3);
  }

  TEST_CASE("double abstractions of constants and variables") {
    CHECK(shape("\\x. \\y. x", ElimAlgo::C2, false) == "I^2");
    CHECK(shape("\\x. \\y. 3", ElimAlgo::C2, false) == "(K^2 3)");
    CHECK(shape("\\x. \\y. 3", ElimAlgo::C2, true) == "⟨K^2+1⟩");
  }

  TEST_CASE("call-by-value specialisations") {
    // (plus 1) is an application, so it may not sit in B's first slot.
    CHECK(shape("\\x. plus 1 x", ElimAlgo::C1, false) == "((S ((N plus) 1)) I)");
    CHECK(shape("\\x. f x", ElimAlgo::C1, false) == "((B f) I)");
    CHECK(shape("\\x. plus x 1", ElimAlgo::C1, false) == "((C ((B plus) I)) 1)");
    CHECK(shape("\\x. if x then 1 else 2 fi", ElimAlgo::C1, true) == "⟨SIF+3⟩");
  }

  TEST_CASE("rosters") {
    auto ids = [](ElimAlgo a) {
      std::set<std::string> out;
      for (const auto& d : make_combinators(a)) out.insert(d.comb_id);
      return out;
    };
    CHECK(ids(ElimAlgo::FAB) == std::set<std::string>{"I", "K", "S"});
    CHECK(ids(ElimAlgo::C1) == std::set<std::string>{"I", "K", "S", "B", "C", "N", "SIF"});
    CHECK(make_combinators(ElimAlgo::C2).size() == 23);
    for (const auto& d : make_combinators(ElimAlgo::C2)) {
      CAPTURE(d.comb_id);
      CHECK(d.value.meta()->comb_id() == d.comb_id);
      CHECK(d.value.meta()->total_arity() == d.total_arity);
      CHECK(&combinator(d.comb_id) != nullptr);
    }
  }

  TEST_CASE("mask combinators") {
    CHECK(mask_combinator({true, true}, 1).comb_id == "S");
    CHECK(mask_combinator({false, true}, 1).comb_id == "B");
    CHECK(mask_combinator({true, false}, 1).comb_id == "C");
    CHECK(mask_combinator({false, false}, 1).comb_id == "N");
  }

  TEST_CASE("hand-made combinators") {
    Value k = extern_value("plus");
    PExpr kc = hand_combinator(HandMade::K_c, {Value::integer(5)});
    MExpr m = check_no_var(px::app(kc, n(0)));
    CHECK(eval(m).as_int() == 5);
    PExpr nc = hand_combinator(HandMade::N_c, {apply(k, Value::integer(2)), Value::integer(3)});
    CHECK(eval(check_no_var(px::app(nc, n(0)))).as_int() == 5);
  }

  TEST_CASE("pre-evaluation folds pure partial applications") {
    PExpr folded = pre_eval_app(px::app(c("K"), n(42)));
    auto* k = folded.as<pexpr::Const>();
    REQUIRE(k);
    CHECK(k->value.meta()->comb_id() == "K");
    CHECK(k->value.meta()->args_seen == 1);
    // Bottom-up: the inner fold enables the outer one.
    PExpr two = pre_eval_app(px::app(c("S"), px::app(c("K"), n(1))));
    REQUIRE(two.is<pexpr::Const>());
    CHECK(two.as<pexpr::Const>()->value.meta()->args_seen == 1);
  }

  TEST_CASE("pre-evaluation leaves other applications alone") {
    // Saturated: folding would run the body.
    PExpr sat = px::app(px::app(c("K"), n(1)), n(2));
    CHECK(count_apps(pre_eval_app(sat)) == 1);
    // Impure head.
    PExpr imp = px::app(px::constant(extern_value("compose")), c("I"));
    CHECK(count_apps(pre_eval_app(imp)) == 1);
    // Argument is not a constant.
    PExpr open = px::app(c("K"), px::var("x"));
    CHECK(count_apps(pre_eval_app(open)) == 1);
    // Not a function.
    PExpr bad = px::app(n(1), n(2));
    CHECK(count_apps(pre_eval_app(bad)) == 1);
  }

  TEST_CASE("check_no_var") {
    CHECK_THROWS_AS(check_no_var(px::var("x")), UnexpectedError);
    CHECK_THROWS_AS(check_no_var(px::abs("x", n(1))), UnexpectedError);
    CHECK_THROWS_AS(check_no_var(px::app(c("I"), px::var("x"))), UnexpectedError);
    MExpr ok = check_no_var(px::app(c("I"), n(1)));
    CHECK(count_apps(ok) == 1);
  }

  TEST_CASE("free variables survive elimination") {
    PExpr p = elim(px::abs("x", px::app(px::var("y"), px::var("x"))), ElimAlgo::FAB);
    CHECK(free_vars(p) == std::set<Ident>{{"y"}});
    CHECK_THROWS_AS(transform(px::var("y"), ElimAlgo::C2), UnexpectedError);
  }

  TEST_CASE("a double projection applied to a computed argument is not a violation") {
    MExpr m = compile(parse("(\\x. \\y. x) !r"), ElimOptions::defaults(ElimAlgo::C2));
    CHECK(cbv_violations(m).empty());
  }

  TEST_CASE("cbv_violations") {
    MExpr plus12 = mx::app(mx::app(mx::constant(extern_value("plus")), mx::constant(Value::integer(1))),
                           mx::constant(Value::integer(2)));
    MExpr bad = mx::app(mx::constant(combinator("K").value), plus12);
    CHECK(cbv_violations(bad).size() == 1);
    MExpr fine = mx::app(mx::app(mx::constant(combinator("S").value), plus12), plus12);
    CHECK(cbv_violations(fine).empty());
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      Expr e = gen_expr(cfg);
      for (ElimAlgo a : {ElimAlgo::FAB, ElimAlgo::C1, ElimAlgo::C2}) {
        auto v = cbv_violations(compile(e, ElimOptions::defaults(a)));
        CHECK(v.empty());
      }
    }
  }
}
