// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

// One PASS/FAIL line per acceptance criterion. Exits non-zero on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <memory>
#include <sstream>
#include <string>

#include "bench.hpp"
#include "checks.hpp"
#include "elim.hpp"
#include "frontend.hpp"
#include "interp.hpp"
#include "purify.hpp"
#include "stack.hpp"

using namespace kombi;

namespace {

constexpr Engine kCombinatorEngines[] = {Engine::FAB, Engine::C1, Engine::C2};
constexpr Engine kAllEngines[] = {Engine::Classical, Engine::FAB, Engine::C1, Engine::C2};

int failures = 0;

void report(int n, const char* name, bool ok, const std::string& details, double seconds) {
  std::printf("%s %d %s: %s (%.1f s)\n", ok ? "PASS" : "FAIL", n, name, details.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class F>
void criterion(int n, const char* name, F body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string details;
  try {
    ok = body(details);
  } catch (const std::exception& e) {
    details = std::string("exception: ") + e.what();
  }
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  report(n, name, ok, details, dt.count());
}

std::size_t schematic_apps(const std::string& text, ElimAlgo algo) {
  ParseOptions po;
  po.allow_holes = true;
  PurifyCtx ctx(std::make_shared<Store>());
  PExpr p = purify(parse(SourceProgram{text, "<claim>"}, po), ctx);
  return with_large_stack([&] { return count_apps(elim(p, ElimOptions::defaults(algo))); });
}

bool differential(std::string& details) {
  std::ostringstream out;
  bool ok = true;
  for (Engine e : kCombinatorEngines) {
    CompareConfig cfg;
    cfg.samples = 1000;
    CompareReport r = compare_random(e, cfg);
    bool good = r.disagree == 0 && r.exhausted * 20 <= r.samples;
    ok = ok && good;
    out << engine_name(e) << " " << r.agree << " agree/" << r.disagree << " disagree/"
        << r.exhausted << " exhausted; ";
    if (!r.failures.empty()) out << "first: " << r.failures.front() << "; ";
  }
  details = out.str();
  return ok;
}

bool theorem(std::string& details) {
  TheoremConfig cfg;
  cfg.samples = 1000;
  cfg.budget = 100'000;
  TheoremReport r = theorem_random(cfg);
  details = std::to_string(r.agree) + " agree, " + std::to_string(r.disagree) + " disagree, " +
            std::to_string(r.inconclusive) + " inconclusive";
  if (!r.failures.empty()) details += "; first: " + r.failures.front();
  return r.disagree == 0;
}

bool sizes(std::string& details) {
  std::size_t fab2 = schematic_apps("\\x. \\y. ?e1 ?e2", ElimAlgo::FAB);
  std::size_t c22 = schematic_apps("\\x. \\y. ?e1 ?e2", ElimAlgo::C2);
  std::size_t fab3 = schematic_apps("\\x. ?e1 ?e2 ?e3", ElimAlgo::FAB);
  std::size_t c23 = schematic_apps("\\x. ?e1 ?e2 ?e3", ElimAlgo::C2);
  std::size_t concrete = schematic_apps("\\x. \\y. x y", ElimAlgo::FAB);
  details = "λx.λy.(e1 e2): FAB " + std::to_string(fab2) + ", S^2 " + std::to_string(c22) +
            "; λx.(e1 e2 e3): FAB " + std::to_string(fab3) + ", S2 " + std::to_string(c23) +
            "; concrete λx.λy.(x y) under FAB: " + std::to_string(concrete);
  return fab2 == 5 && c22 == 2 && fab3 == 4 && c23 == 3;
}

bool benchmarks(std::string& details) {
  BenchReport r = run_bench(corpus(), {std::begin(kAllEngines), std::end(kAllEngines)}, 1);
  std::size_t correct = std::count_if(r.rows.begin(), r.rows.end(), [](const BenchRow& b) { return b.correct; });
  details = std::to_string(correct) + "/" + std::to_string(r.rows.size()) +
            " program/interpreter pairs match their oracles";
  if (!r.trace_mismatches.empty()) details += "; trace mismatch in " + r.trace_mismatches.front();
  return correct == r.rows.size() && r.rows.size() == 7 * 4 && r.trace_mismatches.empty();
}

bool soundness(std::string& details) {
  std::size_t min_ground = SIZE_MAX;
  std::size_t bad = 0;
  std::string first;
  auto defs = make_combinators(ElimAlgo::C2);
  for (const auto& def : defs) {
    SoundnessReport r = check_combinator(def, 64);
    min_ground = std::min(min_ground, r.ground);
    if (!r.failures.empty() || r.ground < 50) {
      ++bad;
      if (first.empty())
        first = def.comb_id + (r.failures.empty() ? " too few ground tuples" : ": " + r.failures.front());
    }
  }
  details = std::to_string(defs.size()) + " combinators, at least " + std::to_string(min_ground) +
            " ground tuples each, " + std::to_string(bad) + " failing";
  if (!first.empty()) details += "; first: " + first;
  return bad == 0;
}

bool pre_eval(std::string& details) {
  PreEvalReport r = pre_eval_safety(1, 500);
  details = std::to_string(r.samples) + " programs, " + std::to_string(r.exhausted) +
            " exhausted, " + std::to_string(r.failures.size()) + " violations";
  if (!r.failures.empty()) details += "; first: " + r.failures.front();
  return r.samples == 500 && r.failures.empty();
}

bool cbv(std::string& details) {
  auto v = cbv_scan(1, 1000);
  details = "1000 programs x 3 algorithms x pre-evaluation on/off, " + std::to_string(v.size()) +
            " violations";
  if (!v.empty()) details += "; first: " + v.front();
  return v.empty();
}

bool thunking(std::string& details) {
  const char* programs[] = {
      "if true then 0 else r := !r + 1 fi; !r",
      "if false then r := !r + 1 else 0 fi; !r",
      "(\\b. if b then 0 else r := !r + 1 fi) (1 <= 2); !r",
  };
  std::size_t runs = 0;
  for (const char* text : programs)
    for (Engine e : kAllEngines) {
      Expr p = check_closed(parse(text));
      RunConfig cfg;
      cfg.engine = e;
      cfg.initial_store = default_store(p);
      Outcome o = run_program(p, cfg);
      bool wrote = std::any_of(o.trace.begin(), o.trace.end(),
                               [](const std::string& l) { return l.rfind("SET", 0) == 0; });
      if (o.kind != Outcome::Ground || o.value.as_int() != 0 || wrote || o.store.at("r") != "0") {
        details = std::string(engine_name(e)) + " touched r in: " + text;
        return false;
      }
      ++runs;
    }
  details = std::to_string(runs) + " runs, untaken branch never wrote";
  return true;
}

}  // namespace

int main() {
  criterion(1, "differential semantics preservation", differential);
  criterion(2, "elimination theorem on random terms", theorem);
  criterion(3, "term-size claims", sizes);
  criterion(4, "benchmark correctness", benchmarks);
  criterion(5, "combinator soundness", soundness);
  criterion(6, "pre-evaluation safety", pre_eval);
  criterion(7, "call-by-value rule discipline", cbv);
  criterion(8, "conditional thunking", thunking);
  return failures == 0 ? 0 : 1;
}
