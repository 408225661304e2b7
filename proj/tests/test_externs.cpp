// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <limits>

#include "doctest.h"
#include "errors.hpp"
#include "externs.hpp"

using namespace kombi;

namespace {

Value call(const std::string& name, std::initializer_list<Value> args) {
  Value f = extern_value(name);
  for (const auto& a : args) f = apply(f, a);
  return f;
}

Value I(std::int64_t n) { return Value::integer(n); }

}  // namespace

TEST_SUITE("externs") {
  TEST_CASE("registry") {
    for (const char* n : {"plus", "minus", "times", "leq", "lt", "eq", "cons", "head", "tail",
                          "isnil", "nil", "compose", "filter"})
      CHECK(registry().count(n) == 1);
    CHECK_THROWS_AS(extern_value("nope"), std::out_of_range);
    CHECK(registry().at("plus").arity == 2);
    CHECK(registry().at("plus").pure);
    CHECK_FALSE(registry().at("compose").pure);
    // Values are created once.
    CHECK(extern_value("plus").as_fun() == extern_value("plus").as_fun());
  }

  TEST_CASE("arithmetic wraps around") {
    CHECK(call("plus", {I(2), I(3)}).as_int() == 5);
    CHECK(call("minus", {I(2), I(3)}).as_int() == -1);
    CHECK(call("times", {I(-4), I(3)}).as_int() == -12);
    auto max = std::numeric_limits<std::int64_t>::max();
    CHECK(call("plus", {I(max), I(1)}).as_int() == std::numeric_limits<std::int64_t>::min());
  }

  TEST_CASE("comparisons") {
    CHECK(call("leq", {I(3), I(3)}).as_bool());
    CHECK_FALSE(call("lt", {I(3), I(3)}).as_bool());
    CHECK(call("eq", {I(3), I(3)}).as_bool());
    CHECK(call("eq", {Value::boolean(true), Value::boolean(true)}).as_bool());
    CHECK_FALSE(call("eq", {Value::boolean(true), Value::boolean(false)}).as_bool());
    CHECK_THROWS_AS(call("eq", {Value::boolean(true), I(1)}), TypeError);
    CHECK_THROWS_AS(call("leq", {Value::boolean(true), I(1)}), TypeError);
  }

  TEST_CASE("partial applications carry metadata") {
    Value p = call("plus", {I(1)});
    auto m = p.meta();
    REQUIRE(m);
    CHECK(m->comb_id() == "plus");
    CHECK(m->args_seen == 1);
    CHECK(m->total_arity() == 2);
  }

  TEST_CASE("lists") {
    Value l = call("cons", {I(1), call("cons", {I(2), extern_value("nil")})});
    CHECK(to_string(l) == "[1, 2]");
    CHECK(call("head", {l}).as_int() == 1);
    CHECK(to_string(call("tail", {l})) == "[2]");
    CHECK(call("isnil", {call("tail", {call("tail", {l})})}).as_bool());
    CHECK_THROWS_AS(call("head", {Value::nil()}), TypeError);
    CHECK_THROWS_AS(call("tail", {Value::nil()}), TypeError);
    CHECK_THROWS_AS(call("head", {I(1)}), TypeError);
    CHECK_THROWS_AS(call("cons", {I(1), I(2)}), TypeError);
  }

  TEST_CASE("higher-order functions") {
    Value l = Value::from_vector({I(1), I(5), I(2), I(8)});
    Value small = call("leq", {I(3)});  // 3 <= x
    CHECK(to_string(call("filter", {small, l})) == "[5, 8]");
    Value inc = call("plus", {I(1)});
    Value dbl = call("times", {I(2)});
    CHECK(call("compose", {dbl, inc, I(4)}).as_int() == 10);
    CHECK_THROWS_AS(call("compose", {I(1)}), TypeError);
    CHECK(call("compose", {dbl}).meta()->args_seen == 1);
  }
}
