// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "kombi/kombi.h"

#include <sstream>
#include <string>

#include "bench.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "frontend.hpp"
#include "interp.hpp"
#include "purify.hpp"
#include "stack.hpp"

using namespace kombi;

struct kombi_session {
  Engine engine = Engine::C2;
  std::uint64_t budget = RunConfig{}.step_budget;
  bool budget_set = false;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  bool pre_eval = true;
  bool hand_made = false;
  bool effects = true;
  std::string counterexample_path;

  std::string result;
  std::string trace;
  std::string error;
  std::uint64_t steps = 0;
  std::uint64_t app_count = 0;

  void clear() {
    result.clear();
    trace.clear();
    error.clear();
    steps = 0;
    app_count = 0;
  }
};

namespace {

constexpr std::size_t kMaxReportedFailures = 10;

kombi_status fail(kombi_session* s, kombi_status status, const std::string& message) {
  s->error = message;
  return status;
}

// Runs a command body, turning exceptions into status codes.
template <class F>
kombi_status guarded(kombi_session* s, F&& body) {
  if (!s) return KOMBI_ERR_INVALID_ARG;
  s->clear();
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(s, KOMBI_ERR_PARSE, e.what());
  } catch (const FreeVariableError& e) {
    return fail(s, KOMBI_ERR_FREE_VAR, e.what());
  } catch (const UnboundVarError& e) {
    return fail(s, KOMBI_ERR_FREE_VAR, e.what());
  } catch (const TypeError& e) {
    return fail(s, KOMBI_ERR_TYPE, e.what());
  } catch (const UnboundTagError& e) {
    return fail(s, KOMBI_ERR_UNBOUND_TAG, e.what());
  } catch (const StepLimitExceeded& e) {
    return fail(s, KOMBI_ERR_STEP_LIMIT, e.what());
  } catch (const UnexpectedError& e) {
    return fail(s, KOMBI_ERR_UNEXPECTED, e.what());
  } catch (const std::exception& e) {
    return fail(s, KOMBI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(s, KOMBI_ERR_INTERNAL, "unknown failure");
  }
}

kombi_status status_of(Outcome::Kind k) {
  switch (k) {
    case Outcome::Ground:
    case Outcome::Function: return KOMBI_OK;
    case Outcome::TypeError: return KOMBI_ERR_TYPE;
    case Outcome::UnboundTag: return KOMBI_ERR_UNBOUND_TAG;
    case Outcome::UnboundVar: return KOMBI_ERR_FREE_VAR;
    case Outcome::StepLimit: return KOMBI_ERR_STEP_LIMIT;
    default: return KOMBI_ERR_UNEXPECTED;
  }
}

SourceProgram source_of(const char* text, const char* origin) {
  SourceProgram p;
  p.text = text;
  if (origin && *origin) p.origin = origin;
  return p;
}

Engine engine_of(kombi_algo a) {
  switch (a) {
    case KOMBI_CLASSICAL: return Engine::Classical;
    case KOMBI_FAB: return Engine::FAB;
    case KOMBI_C1: return Engine::C1;
    default: return Engine::C2;
  }
}

std::vector<Engine> compared_engines(const kombi_session* s) {
  if (s->engine == Engine::Classical) return {Engine::FAB, Engine::C1, Engine::C2};
  return {s->engine};
}

ElimOptions elim_options(const kombi_session* s) {
  ElimOptions o;
  o.algo = s->engine == Engine::Classical ? ElimAlgo::C2 : engine_algo(s->engine);
  o.pre_eval = o.algo != ElimAlgo::FAB && s->pre_eval;
  o.hand_made = s->hand_made;
  return o;
}

std::string join_trace(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

}  // namespace

extern "C" {

kombi_session* kombi_create(void) {
  try {
    return new kombi_session();
  } catch (...) {
    return nullptr;
  }
}

void kombi_destroy(kombi_session* s) { delete s; }

kombi_status kombi_set_algo(kombi_session* s, kombi_algo algo) {
  if (!s || algo < KOMBI_CLASSICAL || algo > KOMBI_C2) return KOMBI_ERR_INVALID_ARG;
  s->engine = engine_of(algo);
  return KOMBI_OK;
}

kombi_status kombi_set_step_budget(kombi_session* s, uint64_t steps) {
  if (!s || steps == 0) return KOMBI_ERR_INVALID_ARG;
  s->budget = steps;
  s->budget_set = true;
  return KOMBI_OK;
}

kombi_status kombi_set_seed(kombi_session* s, uint64_t seed) {
  if (!s) return KOMBI_ERR_INVALID_ARG;
  s->seed = seed;
  return KOMBI_OK;
}

kombi_status kombi_set_samples(kombi_session* s, uint64_t samples) {
  if (!s) return KOMBI_ERR_INVALID_ARG;
  s->samples = samples;
  return KOMBI_OK;
}

kombi_status kombi_set_pre_eval(kombi_session* s, int enabled) {
  if (!s) return KOMBI_ERR_INVALID_ARG;
  s->pre_eval = enabled != 0;
  return KOMBI_OK;
}

kombi_status kombi_set_hand_made(kombi_session* s, int enabled) {
  if (!s) return KOMBI_ERR_INVALID_ARG;
  s->hand_made = enabled != 0;
  return KOMBI_OK;
}

kombi_status kombi_set_effects(kombi_session* s, int enabled) {
  if (!s) return KOMBI_ERR_INVALID_ARG;
  s->effects = enabled != 0;
  return KOMBI_OK;
}

kombi_status kombi_set_counterexample_path(kombi_session* s, const char* path) {
  if (!s) return KOMBI_ERR_INVALID_ARG;
  s->counterexample_path = path ? path : "";
  return KOMBI_OK;
}

kombi_status kombi_parse_algo(const char* name, kombi_algo* out) {
  if (!name || !out) return KOMBI_ERR_INVALID_ARG;
  auto e = parse_engine(name);
  if (!e) return KOMBI_ERR_INVALID_ARG;
  *out = static_cast<kombi_algo>(static_cast<int>(*e));
  return KOMBI_OK;
}

const char* kombi_algo_name(kombi_algo algo) {
  if (algo < KOMBI_CLASSICAL || algo > KOMBI_C2) return "unknown";
  return engine_name(engine_of(algo));
}

const char* kombi_status_name(kombi_status status) {
  switch (status) {
    case KOMBI_OK: return "ok";
    case KOMBI_ERR_PARSE: return "syntax error";
    case KOMBI_ERR_FREE_VAR: return "not closed";
    case KOMBI_ERR_TYPE: return "type error";
    case KOMBI_ERR_UNBOUND_TAG: return "unbound tag";
    case KOMBI_ERR_STEP_LIMIT: return "step limit";
    case KOMBI_ERR_UNEXPECTED: return "unexpected error";
    case KOMBI_ERR_INVALID_ARG: return "invalid argument";
    case KOMBI_ERR_CHECK_FAILED: return "check failed";
    case KOMBI_ERR_IO: return "i/o error";
    case KOMBI_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

kombi_status kombi_run(kombi_session* s, const char* source, const char* origin) {
  if (!source) return KOMBI_ERR_INVALID_ARG;
  return guarded(s, [&] {
    Expr e = check_closed(parse(source_of(source, origin)));
    RunConfig cfg;
    cfg.engine = s->engine;
    cfg.step_budget = s->budget;
    cfg.pre_eval = s->pre_eval;
    cfg.hand_made = s->hand_made;
    cfg.initial_store = default_store(e);
    Outcome o = run_program(e, cfg);
    s->steps = o.steps;
    s->app_count = o.app_count;
    s->trace = join_trace(o.trace);
    if (o.kind == Outcome::Ground || o.kind == Outcome::Function) s->result = to_string(o.value);
    kombi_status st = status_of(o.kind);
    if (st != KOMBI_OK) s->error = o.message;
    return st;
  });
}

kombi_status kombi_transform(kombi_session* s, const char* source, const char* origin) {
  if (!source) return KOMBI_ERR_INVALID_ARG;
  return guarded(s, [&] {
    ParseOptions po;
    po.allow_holes = true;
    Expr e = parse(source_of(source, origin), po);
    std::set<std::string> free;
    bool holes = false;
    for (const auto& v : free_vars(e)) {
      if (is_hole(v))
        holes = true;
      else
        free.insert(v.name);
    }
    if (!free.empty()) throw FreeVariableError(free);

    ElimOptions opts = elim_options(s);
    PurifyCtx ctx(std::make_shared<Store>());
    PExpr p = purify(e, ctx);
    if (holes) {
      PExpr out = with_large_stack([&] { return elim(p, opts); });
      s->result = to_term_string(out);
      s->app_count = count_apps(out);
    } else {
      MExpr out = with_large_stack([&] { return transform(p, opts); });
      s->result = to_term_string(out);
      s->app_count = count_apps(out);
    }
    return KOMBI_OK;
  });
}

kombi_status kombi_compare_source(kombi_session* s, const char* source, const char* origin) {
  if (!source) return KOMBI_ERR_INVALID_ARG;
  return guarded(s, [&] {
    Expr e = check_closed(parse(source_of(source, origin)));
    std::ostringstream out;
    bool bad = false;
    for (Engine eng : compared_engines(s)) {
      std::string why;
      Agreement a = compare_program(e, eng, s->budget, &why);
      out << engine_name(eng) << ": ";
      if (a == Agreement::Agree) {
        RunConfig cfg;
        cfg.engine = Engine::Classical;
        cfg.step_budget = s->budget;
        cfg.initial_store = default_store(e);
        Outcome ref = run_program(e, cfg);
        out << "agree (" << (ref.kind == Outcome::Ground ? to_string(ref.value)
                                                          : std::string(kind_name(ref.kind)))
            << ")\n";
      } else if (a == Agreement::Exhausted) {
        out << "inconclusive (step limit)\n";
      } else {
        bad = true;
        out << "DISAGREE: " << why << '\n';
      }
    }
    s->result = out.str();
    return bad ? fail(s, KOMBI_ERR_CHECK_FAILED, "interpreters disagree") : KOMBI_OK;
  });
}

kombi_status kombi_compare_random(kombi_session* s) {
  return guarded(s, [&] {
    std::ostringstream out;
    bool bad = false;
    for (Engine eng : compared_engines(s)) {
      CompareConfig cfg;
      cfg.seed = s->seed;
      cfg.samples = s->samples;
      if (s->budget_set) cfg.budget = s->budget;
      cfg.gen.allow_effects = s->effects;
      cfg.counterexample_path = s->counterexample_path;
      CompareReport r = compare_random(eng, cfg);
      out << engine_name(eng) << ": " << r.agree << " agree, " << r.disagree << " disagree, "
          << r.exhausted << " step-limit (excluded) of " << r.samples << '\n';
      for (std::size_t i = 0; i < r.failures.size() && i < kMaxReportedFailures; ++i)
        out << "  " << r.failures[i] << '\n';
      if (!r.counterexample.empty()) out << "  shrunk: " << r.counterexample << '\n';
      bad = bad || r.disagree > 0;
    }
    s->result = out.str();
    return bad ? fail(s, KOMBI_ERR_CHECK_FAILED, "interpreters disagree") : KOMBI_OK;
  });
}

kombi_status kombi_theorem(kombi_session* s) {
  return guarded(s, [&] {
    TheoremConfig cfg;
    cfg.seed = s->seed;
    cfg.samples = s->samples;
    if (s->budget_set) cfg.budget = s->budget;
    cfg.gen.allow_effects = s->effects;
    TheoremReport r = theorem_random(cfg);
    std::ostringstream out;
    out << r.agree << " agree, " << r.disagree << " disagree, " << r.inconclusive
        << " inconclusive of " << r.samples << '\n';
    for (std::size_t i = 0; i < r.failures.size() && i < kMaxReportedFailures; ++i)
      out << "  " << r.failures[i] << '\n';
    s->result = out.str();
    return r.disagree ? fail(s, KOMBI_ERR_CHECK_FAILED, "elimination changed a term's meaning")
                      : KOMBI_OK;
  });
}

kombi_status kombi_bench(kombi_session* s, kombi_scale scale, int repetitions, int csv) {
  if (scale < KOMBI_SCALE_SMALL || scale > KOMBI_SCALE_LARGE || repetitions < 1)
    return KOMBI_ERR_INVALID_ARG;
  return guarded(s, [&] {
    CorpusParams params = scale == KOMBI_SCALE_DESK    ? CorpusParams::desk()
                          : scale == KOMBI_SCALE_LARGE ? CorpusParams::large()
                                                       : CorpusParams{};
    std::vector<Engine> engines{Engine::Classical, Engine::FAB, Engine::C1, Engine::C2};
    try {
      BenchReport r = run_bench(corpus(params), engines, repetitions,
                                s->budget_set ? s->budget : 2'000'000'000);
      s->result = csv ? "program,algo,correct,app_count,steps,transform_s,eval_s\n" +
                            format_records(r)
                      : format_table(r);
      return r.trace_mismatches.empty()
                 ? KOMBI_OK
                 : fail(s, KOMBI_ERR_CHECK_FAILED, "store traces differ between interpreters");
    } catch (const BenchFailure& e) {
      return fail(s, KOMBI_ERR_CHECK_FAILED, e.what());
    }
  });
}

kombi_status kombi_combinators(kombi_session* s) {
  return guarded(s, [&] {
    std::ostringstream out;
    bool bad = false;
    for (const auto& def : make_combinators(elim_options(s).algo)) {
      SoundnessReport r = check_combinator(def, 64, s->seed);
      out << def.comb_id << "\tarity " << def.total_arity << "\t" << to_string(def.defining_term)
          << "\t" << r.tuples << " tuples, " << r.ground << " ground, "
          << (r.failures.empty() ? "ok" : "MISMATCH") << '\n';
      for (std::size_t i = 0; i < r.failures.size() && i < kMaxReportedFailures; ++i)
        out << "  " << r.failures[i] << '\n';
      bad = bad || !r.failures.empty();
    }
    s->result = out.str();
    return bad ? fail(s, KOMBI_ERR_CHECK_FAILED, "combinator differs from its definition")
               : KOMBI_OK;
  });
}

const char* kombi_result(const kombi_session* s) { return s ? s->result.c_str() : ""; }
const char* kombi_trace(const kombi_session* s) { return s ? s->trace.c_str() : ""; }
const char* kombi_error_message(const kombi_session* s) { return s ? s->error.c_str() : ""; }
uint64_t kombi_steps(const kombi_session* s) { return s ? s->steps : 0; }
uint64_t kombi_app_count(const kombi_session* s) { return s ? s->app_count : 0; }

}  // extern "C"
