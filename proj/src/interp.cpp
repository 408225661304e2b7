// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "interp.hpp"

#include <chrono>
#include <sstream>

#include "classical.hpp"
#include "errors.hpp"
#include "eval.hpp"
#include "purify.hpp"
#include "stack.hpp"

namespace kombi {

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Classical: return "classical";
    case Engine::FAB: return "fab";
    case Engine::C1: return "c1";
    default: return "c2";
  }
}

std::optional<Engine> parse_engine(const std::string& name) {
  for (Engine e : {Engine::Classical, Engine::FAB, Engine::C1, Engine::C2})
    if (name == engine_name(e)) return e;
  return std::nullopt;
}

ElimAlgo engine_algo(Engine e) {
  switch (e) {
    case Engine::FAB: return ElimAlgo::FAB;
    case Engine::C1: return ElimAlgo::C1;
    default: return ElimAlgo::C2;
  }
}

const char* kind_name(Outcome::Kind k) {
  switch (k) {
    case Outcome::Ground: return "value";
    case Outcome::Function: return "function";
    case Outcome::TypeError: return "type-error";
    case Outcome::UnboundTag: return "unbound-tag";
    case Outcome::UnboundVar: return "unbound-variable";
    case Outcome::StepLimit: return "step-limit";
    default: return "unexpected";
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string render(const Value& v) { return to_string(v); }

std::uint64_t mix(std::uint64_t h, const std::string& line) {
  // FNV-1a over the line and a separator.
  if (h == 0) h = 1469598103934665603ull;
  for (unsigned char c : line) h = (h ^ c) * 1099511628211ull;
  return (h ^ '\n') * 1099511628211ull;
}

template <class F>
void capture(Outcome& out, F&& body) {
  try {
    body();
  } catch (const TypeError& e) {
    out.kind = Outcome::TypeError;
    out.message = e.what();
  } catch (const UnboundTagError& e) {
    out.kind = Outcome::UnboundTag;
    out.message = e.what();
  } catch (const UnboundVarError& e) {
    out.kind = Outcome::UnboundVar;
    out.message = e.what();
  } catch (const StepLimitExceeded& e) {
    out.kind = Outcome::StepLimit;
    out.message = e.what();
  } catch (const UnexpectedError& e) {
    out.kind = Outcome::Unexpected;
    out.message = e.what();
  }
}

void set_value(Outcome& out, Value v) {
  out.kind = v.is_fun() ? Outcome::Function : Outcome::Ground;
  out.value = std::move(v);
}

void collect_tags(const Expr& e, Store::Bindings& out) {
  e.visit([&](const auto& n) {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, expr::Abs>) {
      collect_tags(n.body, out);
    } else if constexpr (std::is_same_v<T, expr::App>) {
      collect_tags(n.fn, out);
      collect_tags(n.arg, out);
    } else if constexpr (std::is_same_v<T, expr::If>) {
      collect_tags(n.cond, out);
      collect_tags(n.then_branch, out);
      collect_tags(n.else_branch, out);
    } else if constexpr (std::is_same_v<T, expr::Get>) {
      out.emplace(n.tag, Value::integer(0));
    } else if constexpr (std::is_same_v<T, expr::Set>) {
      out.emplace(n.tag, Value::integer(0));
      collect_tags(n.value, out);
    }
  });
}

}  // namespace

Store::Bindings default_store(const Expr& program) {
  Store::Bindings b;
  collect_tags(program, b);
  return b;
}

MExpr compile(const Expr& program, const ElimOptions& opts) {
  PurifyCtx ctx(std::make_shared<Store>());
  PExpr p = purify(program, ctx);
  return with_large_stack([&] { return transform(p, opts); });
}

Outcome run_program(const Expr& program, const RunConfig& cfg) {
  Outcome out;
  auto store = std::make_shared<Store>(cfg.initial_store);
  ExecLimits limits;
  limits.step_budget = cfg.step_budget;
  limits.stack_bytes = kLargeStackBudget;

  with_large_stack([&] {
    if (cfg.engine == Engine::Classical) {
      Classical interp(store);
      auto t0 = Clock::now();
      capture(out, [&] {
        ExecScope scope(limits);
        try {
          set_value(out, interp.lower(interp.ceval(nullptr, program)));
        } catch (...) {
          out.steps = scope.steps();
          throw;
        }
        out.steps = scope.steps();
      });
      out.eval_s = seconds_since(t0);
      return;
    }

    ElimOptions opts;
    opts.algo = engine_algo(cfg.engine);
    opts.pre_eval = cfg.engine != Engine::FAB && cfg.pre_eval;
    opts.hand_made = cfg.hand_made;

    auto t0 = Clock::now();
    PurifyCtx ctx(store);
    capture(out, [&] { out.term = transform(purify(program, ctx), opts); });
    out.transform_s = seconds_since(t0);
    out.transform_events = store->trace().size();
    if (!out.term) return;
    out.app_count = count_apps(out.term);

    auto t1 = Clock::now();
    capture(out, [&] {
      ExecScope scope(limits);
      try {
        set_value(out, eval(out.term));
      } catch (...) {
        out.steps = scope.steps();
        throw;
      }
      out.steps = scope.steps();
    });
    out.eval_s = seconds_since(t1);
  });

  out.trace_size = store->trace().size();
  if (cfg.keep_trace) {
    out.trace = trace_lines(*store, render);
    for (const auto& line : out.trace) out.trace_digest = mix(out.trace_digest, line);
  } else {
    for (const auto& e : store->trace())
      out.trace_digest = mix(out.trace_digest, (e.kind == StoreOp::Get ? "GET " : "SET ") +
                                                   e.tag.name + " " + render(e.value));
  }
  out.store = render_bindings(*store, render);
  return out;
}

bool same_observation(const Outcome& a, const Outcome& b, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (a.kind != b.kind)
    return fail(std::string("outcome ") + kind_name(a.kind) + " vs " + kind_name(b.kind));
  if (a.kind == Outcome::Ground && !value_ground_eq(a.value, b.value))
    return fail("value " + to_string(a.value) + " vs " + to_string(b.value));
  if (a.trace_digest != b.trace_digest || a.trace != b.trace) {
    std::size_t i = 0;
    while (i < a.trace.size() && i < b.trace.size() && a.trace[i] == b.trace[i]) ++i;
    auto at = [](const std::vector<std::string>& t, std::size_t i) {
      return i < t.size() ? t[i] : std::string("<end>");
    };
    return fail("trace differs at event " + std::to_string(i) + ": " + at(a.trace, i) +
                " vs " + at(b.trace, i));
  }
  if (a.store != b.store) return fail("final stores differ");
  return true;
}

std::string describe(const Outcome& o) {
  std::ostringstream out;
  if (o.kind == Outcome::Ground || o.kind == Outcome::Function)
    out << to_string(o.value);
  else
    out << kind_name(o.kind) << ": " << o.message;
  out << '\n';
  for (const auto& line : o.trace) out << "  " << line << '\n';
  return out.str();
}

}  // namespace kombi
