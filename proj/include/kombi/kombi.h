// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef KOMBI_KOMBI_H_
#define KOMBI_KOMBI_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KOMBI_API __declspec(dllexport)
#else
#define KOMBI_API __attribute__((visibility("default")))
#endif

typedef enum kombi_status {
  KOMBI_OK = 0,
  KOMBI_ERR_PARSE = 1,
  KOMBI_ERR_FREE_VAR = 2,
  KOMBI_ERR_TYPE = 3,
  KOMBI_ERR_UNBOUND_TAG = 4,
  KOMBI_ERR_STEP_LIMIT = 5,
  KOMBI_ERR_UNEXPECTED = 6,
  KOMBI_ERR_INVALID_ARG = 7,
  // A correctness check found a violation: interpreters disagree, a
  // benchmark result is wrong, a combinator does not match its definition.
  KOMBI_ERR_CHECK_FAILED = 8,
  KOMBI_ERR_IO = 9,
  KOMBI_ERR_INTERNAL = 10
} kombi_status;

typedef enum kombi_algo {
  KOMBI_CLASSICAL = 0,
  KOMBI_FAB = 1,
  KOMBI_C1 = 2,
  KOMBI_C2 = 3
} kombi_algo;

typedef enum kombi_scale {
  KOMBI_SCALE_SMALL = 0,  // fib 10, ack (3,5), sort 500, queens 8
  KOMBI_SCALE_DESK = 1,
  KOMBI_SCALE_LARGE = 2
} kombi_scale;

// One interpreter session. Settings persist across calls; every command
// replaces the previous output. A session must not be used from two
// threads at once; distinct sessions are independent.
typedef struct kombi_session kombi_session;

KOMBI_API kombi_session* kombi_create(void);
KOMBI_API void kombi_destroy(kombi_session* s);

// Defaults: c2, 50,000,000 steps, seed 1, 1000 samples, pre-evaluation on,
// hand-made combinators off, effects on.
KOMBI_API kombi_status kombi_set_algo(kombi_session* s, kombi_algo algo);
KOMBI_API kombi_status kombi_set_step_budget(kombi_session* s, uint64_t steps);
KOMBI_API kombi_status kombi_set_seed(kombi_session* s, uint64_t seed);
KOMBI_API kombi_status kombi_set_samples(kombi_session* s, uint64_t samples);
KOMBI_API kombi_status kombi_set_pre_eval(kombi_session* s, int enabled);
KOMBI_API kombi_status kombi_set_hand_made(kombi_session* s, int enabled);
KOMBI_API kombi_status kombi_set_effects(kombi_session* s, int enabled);
// File receiving the shrunk counterexample of a failed random comparison;
// NULL or "" disables it.
KOMBI_API kombi_status kombi_set_counterexample_path(kombi_session* s, const char* path);

KOMBI_API kombi_status kombi_parse_algo(const char* name, kombi_algo* out);
KOMBI_API const char* kombi_algo_name(kombi_algo algo);
KOMBI_API const char* kombi_status_name(kombi_status status);

// Runs a closed program. The result text is the value (`<fun>` for
// functions); the trace holds one line per store event.
KOMBI_API kombi_status kombi_run(kombi_session* s, const char* source, const char* origin);

// Translates a program to combinators with the session's algorithm (c2 when
// it is classical). `?name` metavariables are accepted and stay opaque; the
// program must otherwise be closed. The result text is the term.
KOMBI_API kombi_status kombi_transform(kombi_session* s, const char* source, const char* origin);

// Runs a program on the classical interpreter and on the session's
// algorithm (on all three when it is classical) and compares results,
// final stores and traces.
KOMBI_API kombi_status kombi_compare_source(kombi_session* s, const char* source,
                                            const char* origin);

// The same comparison over `samples` generated programs per algorithm.
KOMBI_API kombi_status kombi_compare_random(kombi_session* s);

// Checks the formal elimination against the calculus on `samples` generated
// terms.
KOMBI_API kombi_status kombi_theorem(kombi_session* s);

// Runs the benchmark corpus on every interpreter. `csv` selects one record
// per line instead of a table.
KOMBI_API kombi_status kombi_bench(kombi_session* s, kombi_scale scale, int repetitions, int csv);

// Lists the combinators of the session's algorithm and checks each native
// implementation against its defining term.
KOMBI_API kombi_status kombi_combinators(kombi_session* s);

// Output of the last command. Strings stay valid until the next command on
// the same session.
KOMBI_API const char* kombi_result(const kombi_session* s);
KOMBI_API const char* kombi_trace(const kombi_session* s);
KOMBI_API const char* kombi_error_message(const kombi_session* s);
KOMBI_API uint64_t kombi_steps(const kombi_session* s);
// Applications in the combinator term (0 for the classical interpreter).
KOMBI_API uint64_t kombi_app_count(const kombi_session* s);

#ifdef __cplusplus
}
#endif

#endif  // KOMBI_KOMBI_H_
