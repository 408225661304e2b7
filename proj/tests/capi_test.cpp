// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

// Uses nothing but the public header and the shared library.

#include <string>

#include "doctest.h"
#include "kombi/kombi.h"

namespace {

struct Session {
  kombi_session* s = kombi_create();
  ~Session() { kombi_destroy(s); }
};

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("run") {
    Session h;
    REQUIRE(h.s);
    CHECK(kombi_run(h.s, "(\\x. x) 3", "<t>") == KOMBI_OK);
    CHECK(std::string(kombi_result(h.s)) == "3");
    CHECK(kombi_steps(h.s) > 0);
    CHECK(kombi_run(h.s, "r := 2; !r", nullptr) == KOMBI_OK);
    CHECK(std::string(kombi_trace(h.s)) == "SET r 2\nGET r 2\n");
  }

  TEST_CASE("every algorithm") {
    Session h;
    for (kombi_algo a : {KOMBI_CLASSICAL, KOMBI_FAB, KOMBI_C1, KOMBI_C2}) {
      CAPTURE(kombi_algo_name(a));
      CHECK(kombi_set_algo(h.s, a) == KOMBI_OK);
      CHECK(kombi_run(h.s, "(\\f. f (f 2)) (\\x. x * x)", "<t>") == KOMBI_OK);
      CHECK(std::string(kombi_result(h.s)) == "16");
    }
  }

  TEST_CASE("error codes") {
    Session h;
    CHECK(kombi_run(h.s, "(1", "<t>") == KOMBI_ERR_PARSE);
    CHECK(std::string(kombi_error_message(h.s)).find("1:3") != std::string::npos);
    CHECK(kombi_run(h.s, "x", "<t>") == KOMBI_ERR_FREE_VAR);
    CHECK(kombi_run(h.s, "1 2", "<t>") == KOMBI_ERR_TYPE);
    // Tags the program mentions start at 0.
    CHECK(kombi_run(h.s, "!q", "<t>") == KOMBI_OK);
    CHECK(std::string(kombi_result(h.s)) == "0");
    kombi_set_step_budget(h.s, 1000);
    CHECK(kombi_run(h.s, "(\\x. x x) (\\x. x x)", "<t>") == KOMBI_ERR_STEP_LIMIT);
    CHECK(kombi_set_step_budget(h.s, 0) == KOMBI_ERR_INVALID_ARG);
    CHECK(kombi_run(h.s, nullptr, "<t>") == KOMBI_ERR_INVALID_ARG);
    CHECK(kombi_run(nullptr, "1", "<t>") == KOMBI_ERR_INVALID_ARG);
    CHECK(kombi_set_algo(h.s, static_cast<kombi_algo>(42)) == KOMBI_ERR_INVALID_ARG);
    // A failed call leaves no stale result.
    CHECK(std::string(kombi_result(h.s)).empty());
  }

  TEST_CASE("names") {
    kombi_algo a = KOMBI_CLASSICAL;
    CHECK(kombi_parse_algo("fab", &a) == KOMBI_OK);
    CHECK(a == KOMBI_FAB);
    CHECK(kombi_parse_algo("c3", &a) == KOMBI_ERR_INVALID_ARG);
    CHECK(std::string(kombi_algo_name(KOMBI_C2)) == "c2");
    CHECK(std::string(kombi_status_name(KOMBI_ERR_PARSE)) == "syntax error");
  }

  TEST_CASE("transform") {
    Session h;
    kombi_set_algo(h.s, KOMBI_FAB);
    CHECK(kombi_transform(h.s, "\\x. \\y. ?M ?N", "<t>") == KOMBI_OK);
    CHECK(kombi_app_count(h.s) == 5);
    kombi_set_algo(h.s, KOMBI_C2);
    CHECK(kombi_transform(h.s, "\\x. \\y. ?M ?N", "<t>") == KOMBI_OK);
    CHECK(kombi_app_count(h.s) == 2);
    CHECK(std::string(kombi_result(h.s)).rfind("((S^2 ", 0) == 0);
    CHECK(kombi_transform(h.s, "\\x. y", "<t>") == KOMBI_ERR_FREE_VAR);
  }

  TEST_CASE("checks") {
    Session h;
    kombi_set_samples(h.s, 30);
    CHECK(kombi_compare_random(h.s) == KOMBI_OK);
    CHECK(kombi_compare_source(h.s, "r := 3; !r", "<t>") == KOMBI_OK);
    CHECK(kombi_theorem(h.s) == KOMBI_OK);
    kombi_set_algo(h.s, KOMBI_C1);
    CHECK(kombi_combinators(h.s) == KOMBI_OK);
    CHECK(std::string(kombi_result(h.s)).find("SIF") != std::string::npos);
  }
}
