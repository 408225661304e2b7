// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "checks.hpp"

#include <random>

#include "errors.hpp"
#include "externs.hpp"
#include "frontend.hpp"
#include "stack.hpp"

namespace kombi {

namespace {

bool exhausted(const Outcome& o) { return o.kind == Outcome::StepLimit; }

Outcome run_on(const Expr& e, Engine engine, std::uint64_t budget, bool pre_eval = true) {
  RunConfig cfg;
  cfg.engine = engine;
  cfg.step_budget = budget;
  cfg.pre_eval = pre_eval;
  cfg.initial_store = default_store(e);
  return run_program(e, cfg);
}

}  // namespace

Agreement compare_program(const Expr& program, Engine engine, std::uint64_t budget,
                          std::string* why) {
  Outcome ref = run_on(program, Engine::Classical, budget);
  Outcome got = run_on(program, engine, budget);
  if (exhausted(ref) || exhausted(got)) return Agreement::Exhausted;
  if (ref.kind == Outcome::Unexpected || got.kind == Outcome::Unexpected) {
    if (why) *why = "unexpected error: " + (ref.message.empty() ? got.message : ref.message);
    return Agreement::Disagree;
  }
  return same_observation(ref, got, why) ? Agreement::Agree : Agreement::Disagree;
}

CompareReport compare_random(Engine engine, const CompareConfig& cfg) {
  CompareReport r;
  std::optional<Expr> first_failure;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    GenConfig g = cfg.gen;
    g.seed = cfg.seed + i;
    Expr e = gen_expr(g);
    std::string why;
    ++r.samples;
    switch (compare_program(e, engine, cfg.budget, &why)) {
      case Agreement::Agree: ++r.agree; break;
      case Agreement::Exhausted: ++r.exhausted; break;
      case Agreement::Disagree:
        ++r.disagree;
        r.failures.push_back("seed " + std::to_string(g.seed) + ": " + why);
        if (!first_failure) first_failure = e;
        break;
    }
  }
  if (first_failure) {
    Expr small = shrink(*first_failure, [&](const Expr& c) {
      return compare_program(c, engine, cfg.budget) == Agreement::Disagree;
    });
    r.counterexample = to_source(small);
    if (!cfg.counterexample_path.empty())
      write_counterexample(cfg.counterexample_path, small,
                           std::string("classical vs ") + engine_name(engine) + ", " +
                               r.failures.front());
  }
  return r;
}

TheoremReport theorem_random(const TheoremConfig& cfg) {
  TheoremReport r;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    GenConfig g = cfg.gen;
    g.seed = cfg.seed + i;
    RTerm m = gen_rterm(g);
    std::vector<std::string> tags = gen_tags(g);
    RStore::Bindings init;
    for (std::size_t k = 0; k < tags.size(); ++k)
      init.emplace(Tag{tags[k]}, rt::integer(static_cast<std::int64_t>(k)));
    Verdict v = check_theorem(m, RStore(init), default_delta(tags), cfg.budget);
    ++r.samples;
    switch (v.kind) {
      case Verdict::Agree: ++r.agree; break;
      case Verdict::Inconclusive: ++r.inconclusive; break;
      case Verdict::Disagree:
        ++r.disagree;
        r.failures.push_back("seed " + std::to_string(g.seed) + ": " + v.details + "\n  " +
                             to_string(m));
        break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Combinator soundness.

namespace {

struct Probe {
  std::string label;
  Value value;
  RTerm term;
};

std::vector<Probe> probe_battery() {
  std::vector<Probe> p;
  for (std::int64_t n : {0, 1, -2, 7})
    p.push_back({std::to_string(n), Value::integer(n), rt::integer(n)});
  p.push_back({"true", Value::boolean(true), rt::boolean(true)});
  p.push_back({"false", Value::boolean(false), rt::boolean(false)});
  for (const char* op : {"plus", "minus", "times", "leq", "eq"})
    p.push_back({op, extern_value(op), rt::sym(op)});
  p.push_back({"plus 1", apply(extern_value("plus"), Value::integer(1)),
               rt::app(rt::sym("plus"), rt::integer(1))});
  p.push_back({"times 2", apply(extern_value("times"), Value::integer(2)),
               rt::app(rt::sym("times"), rt::integer(2))});
  p.push_back({"leq 3", apply(extern_value("leq"), Value::integer(3)),
               rt::app(rt::sym("leq"), rt::integer(3))});
  p.push_back({"\\x.x", Value::fun([](const Value& x) { return x; }),
               rt::abs("x", rt::var("x"))});
  p.push_back({"\\x.\\y.x", Value::fun([](const Value& x) {
                 return Value::fun([x](const Value&) { return x; });
               }),
               rt::abs("x", rt::abs("y", rt::var("x")))});
  p.push_back({"\\x.\\y.y", Value::fun([](const Value&) {
                 return Value::fun([](const Value& y) { return y; });
               }),
               rt::abs("x", rt::abs("y", rt::var("y")))});
  p.push_back({"\\x.3", Value::fun([](const Value&) { return Value::integer(3); }),
               rt::abs("x", rt::integer(3))});
  p.push_back({"\\f.f 2", Value::fun([](const Value& f) { return apply(f, Value::integer(2)); }),
               rt::abs("f", rt::app(rt::var("f"), rt::integer(2)))});
  return p;
}

struct Observation {
  bool stuck = false;
  bool ground = false;
  std::string text;
};

constexpr std::uint64_t kProbeBudget = 100'000;
constexpr int kExtraArgs = 3;

Observation observe_native(const Value& f, const std::vector<const Probe*>& args) {
  Observation o;
  ExecLimits limits;
  limits.step_budget = kProbeBudget;
  try {
    ExecScope scope(limits);
    Value v = f;
    for (const Probe* a : args) v = apply(v, a->value);
    for (int extra = 0; extra < kExtraArgs && v.is_fun(); ++extra)
      v = apply(v, Value::integer(extra + 1));
    o.ground = is_ground(v);
    o.text = to_string(v);
  } catch (const TypeError&) {
    o.stuck = true;
  }
  return o;
}

Observation observe_term(const RTerm& def, const std::vector<const Probe*>& args,
                         const DeltaTable& delta, bool* timeout) {
  Observation o;
  RTerm m = def;
  for (const Probe* a : args) m = rt::app(m, a->term);
  RunOutcome r = run(m, RStore(), delta, kProbeBudget);
  for (int extra = 0; extra < kExtraArgs && r.kind == RunOutcome::Value && !is_ground(r.term);
       ++extra)
    r = run(rt::app(r.term, rt::integer(extra + 1)), r.store, delta, kProbeBudget);
  if (r.kind == RunOutcome::Timeout) *timeout = true;
  o.stuck = r.kind == RunOutcome::Stuck;
  o.ground = r.kind == RunOutcome::Value && is_ground(r.term);
  o.text = observe(r.term);
  return o;
}

}  // namespace

SoundnessReport check_combinator(const CombinatorDef& def, std::size_t tuples,
                                 std::uint64_t seed) {
  static const std::vector<Probe> battery = probe_battery();
  static const DeltaTable delta = default_delta();
  SoundnessReport r;
  r.comb_id = def.comb_id;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, battery.size() - 1);
  // Most random tuples are ill-typed. The first `tuples` draws are all
  // compared; after that only draws whose native result is ground, until
  // enough of those have been compared.
  const std::size_t max_attempts = 20000 * tuples;
  with_large_stack([&] {
    for (std::size_t t = 0; t < max_attempts && (t < tuples || r.ground < tuples); ++t) {
      std::vector<const Probe*> args;
      for (int i = 0; i < def.total_arity; ++i) args.push_back(&battery[pick(rng)]);
      Observation native = observe_native(def.value, args);
      if (t >= tuples && !native.ground) continue;
      bool timeout = false;
      Observation formal = observe_term(def.defining_term, args, delta, &timeout);
      ++r.tuples;
      bool same = !timeout && native.stuck == formal.stuck && native.ground == formal.ground &&
                  (native.stuck || !native.ground || native.text == formal.text);
      if (native.ground && same) ++r.ground;
      if (!same) {
        std::string tuple;
        for (const Probe* a : args) tuple += " (" + a->label + ")";
        auto show = [](const Observation& o) {
          return o.stuck ? std::string("stuck") : o.ground ? o.text : std::string("<fun>");
        };
        r.failures.push_back(def.comb_id + tuple + ": native " + show(native) + ", term " +
                             (timeout ? std::string("timeout") : show(formal)));
      }
    }
  });
  return r;
}

// ---------------------------------------------------------------------------

PreEvalReport pre_eval_safety(std::uint64_t seed, std::size_t samples, std::uint64_t budget) {
  PreEvalReport r;
  for (std::size_t i = 0; i < samples; ++i) {
    GenConfig g;
    g.seed = seed + i;
    Expr e = gen_expr(g);
    Outcome with = run_on(e, Engine::C1, budget, true);
    Outcome without = run_on(e, Engine::C1, budget, false);
    ++r.samples;
    std::string label = "seed " + std::to_string(g.seed) + ": ";
    if (with.transform_events != 0 || without.transform_events != 0)
      r.failures.push_back(label + "store touched during transformation");
    if (exhausted(with) || exhausted(without)) {
      ++r.exhausted;
      continue;
    }
    std::string why;
    if (!same_observation(with, without, &why)) r.failures.push_back(label + why);
  }
  return r;
}

std::vector<std::string> cbv_scan(std::uint64_t seed, std::size_t samples) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < samples; ++i) {
    GenConfig g;
    g.seed = seed + i;
    Expr e = gen_expr(g);
    for (ElimAlgo algo : {ElimAlgo::FAB, ElimAlgo::C1, ElimAlgo::C2})
      for (bool pre : {false, true}) {
        ElimOptions opts;
        opts.algo = algo;
        opts.pre_eval = pre;
        MExpr m = compile(e, opts);
        for (const auto& v : with_large_stack([&] { return cbv_violations(m); }))
          out.push_back("seed " + std::to_string(g.seed) + " " + algo_name(algo) +
                        (pre ? "+pre: " : ": ") + v);
      }
  }
  return out;
}

}  // namespace kombi
