// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <memory>

#include "classical.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "frontend.hpp"

using namespace kombi;

namespace {

struct Run {
  StoreHandle store;
  CValue result;
};

Run ceval_text(const std::string& text, Store::Bindings init = {}) {
  auto store = std::make_shared<Store>(std::move(init));
  Classical c(store);
  CValue v = c.ceval(nullptr, check_closed(parse(text)));
  return {store, v};
}

std::string text_of(const std::string& program) {
  Run r = ceval_text(program);
  if (r.result.is_closure()) return "<closure>";
  return to_string(*r.result.value());
}

const char* kFib =
    "(\\self. self self) (\\fib. \\n. if n <= 1 then 1 else "
    "fib fib (n - 1) + fib fib (n - 2) fi) 10";

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("recursion through self application") { CHECK(text_of(kFib) == "89"); }

  TEST_CASE("closures capture their defining environment") {
    CHECK(text_of("(\\x. \\y. x) 1 2") == "1");
    CHECK(text_of("(\\x. (\\f. (\\x. f 0) 7) (\\y. x)) 5") == "5");
    CHECK(text_of("\\x. x") == "<closure>");
  }

  TEST_CASE("environments") {
    Env e = env_extend(nullptr, Ident{"x"}, Value::integer(1));
    e = env_extend(e, Ident{"x"}, Value::integer(2));
    CHECK(env_lookup(e, Ident{"x"}).value()->as_int() == 2);
    CHECK_THROWS_AS(env_lookup(e, Ident{"y"}), UnboundVarError);
  }

  TEST_CASE("library functions accept closures") {
    CHECK(text_of("filter (\\x. x < 3) [1, 5, 2]") == "[1, 2]");
    CHECK(text_of("compose (\\x. x * 2) (\\x. x + 1) 4") == "10");
  }

  TEST_CASE("type errors") {
    CHECK_THROWS_AS(ceval_text("1 2"), TypeError);
    CHECK_THROWS_AS(ceval_text("if 1 then 2 else 3 fi"), TypeError);
    CHECK_THROWS_AS(ceval_text("plus true 1"), TypeError);
    CHECK_THROWS_AS(ceval_text("head nil"), TypeError);
    CHECK_THROWS_AS(ceval_text("!r"), UnboundTagError);
  }

  TEST_CASE("only the chosen branch runs") {
    Run r = ceval_text("if true then r := 1 else r := 2 fi", {{Tag{"r"}, Value::integer(0)}});
    CHECK(r.store->bindings().at(Tag{"r"}).as_int() == 1);
    CHECK(r.store->trace().size() == 1);
  }

  TEST_CASE("operator, then operand, then the call") {
    Run r = ceval_text("(r := 1; \\x. r := x) (r := 2; 3)", {{Tag{"r"}, Value::integer(0)}});
    auto lines = trace_lines(*r.store, [](const Value& v) { return to_string(v); });
    CHECK(lines == std::vector<std::string>{"SET r 1", "SET r 2", "SET r 3"});
    CHECK(r.result.value()->as_int() == 3);
  }

  TEST_CASE("abstractions delay effects") {
    Run r = ceval_text("(\\f. 0) (\\x. r := 9)", {{Tag{"r"}, Value::integer(0)}});
    CHECK(r.store->trace().empty());
  }
}
