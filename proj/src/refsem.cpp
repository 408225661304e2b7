// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "refsem.hpp"

#include <atomic>
#include <set>

#include "errors.hpp"
#include "stack.hpp"

namespace kombi {

namespace rt {
RTerm var(std::string name) { return var(Ident{std::move(name)}); }
RTerm var(Ident name) { return make_term<RTermNode>(rterm::Var{std::move(name)}); }
RTerm abs(std::string param, RTerm body) { return abs(Ident{std::move(param)}, std::move(body)); }
RTerm abs(Ident param, RTerm body) {
  return make_term<RTermNode>(rterm::Abs{std::move(param), std::move(body)});
}
RTerm app(RTerm fn, RTerm arg) {
  return make_term<RTermNode>(rterm::App{std::move(fn), std::move(arg)});
}
RTerm app(RTerm fn, RTerm a, RTerm b) { return app(app(std::move(fn), std::move(a)), std::move(b)); }
RTerm app(RTerm fn, RTerm a, RTerm b, RTerm c) {
  return app(app(std::move(fn), std::move(a), std::move(b)), std::move(c));
}
RTerm sym(std::string symbol) { return make_term<RTermNode>(rterm::Const{std::move(symbol), 0, {}}); }
RTerm integer(std::int64_t n) { return make_term<RTermNode>(rterm::Const{"int", n, {}}); }
RTerm boolean(bool b) { return make_term<RTermNode>(rterm::Const{"bool", b ? 1 : 0, {}}); }
RTerm dummy() { return make_term<RTermNode>(rterm::Const{"dummy", 0, {}}); }
}  // namespace rt

namespace {

void collect_free(const RTerm& m, std::set<Ident>& bound, std::set<Ident>& out) {
  if (auto* v = m.as<rterm::Var>()) {
    if (!bound.count(v->name)) out.insert(v->name);
  } else if (auto* a = m.as<rterm::Abs>()) {
    bool fresh = bound.insert(a->param).second;
    collect_free(a->body, bound, out);
    if (fresh) bound.erase(a->param);
  } else if (auto* a = m.as<rterm::App>()) {
    collect_free(a->fn, bound, out);
    collect_free(a->arg, bound, out);
  } else {
    for (const auto& arg : m.as<rterm::Const>()->args) collect_free(arg, bound, out);
  }
}

std::set<Ident> free_vars(const RTerm& m) {
  std::set<Ident> bound, out;
  collect_free(m, bound, out);
  return out;
}

bool free_in(const Ident& x, const RTerm& m) {
  if (auto* v = m.as<rterm::Var>()) return v->name == x;
  if (auto* a = m.as<rterm::Abs>()) return a->param != x && free_in(x, a->body);
  if (auto* a = m.as<rterm::App>()) return free_in(x, a->fn) || free_in(x, a->arg);
  for (const auto& arg : m.as<rterm::Const>()->args)
    if (free_in(x, arg)) return true;
  return false;
}

Ident fresh_name() {
  static std::atomic<std::uint64_t> counter{0};
  return Ident{std::string(1, kReservedPrefix) + "r" + std::to_string(counter++)};
}

// Returns an empty term when nothing changed, so unchanged subtrees stay
// shared.
RTerm subst_rec(const Ident& x, const RTerm& v, const std::set<Ident>& fv_v,
                const RTerm& m) {
  if (auto* var = m.as<rterm::Var>()) return var->name == x ? v : RTerm();
  if (auto* a = m.as<rterm::App>()) {
    RTerm f = subst_rec(x, v, fv_v, a->fn);
    RTerm g = subst_rec(x, v, fv_v, a->arg);
    if (!f && !g) return RTerm();
    return rt::app(f ? f : a->fn, g ? g : a->arg);
  }
  if (auto* c = m.as<rterm::Const>()) {
    if (c->args.empty()) return RTerm();
    bool changed = false;
    std::vector<RTerm> args;
    for (const auto& arg : c->args) {
      RTerm r = subst_rec(x, v, fv_v, arg);
      changed = changed || bool(r);
      args.push_back(r ? r : arg);
    }
    if (!changed) return RTerm();
    return make_term<RTermNode>(rterm::Const{c->symbol, c->payload, std::move(args)});
  }
  auto* a = m.as<rterm::Abs>();
  if (a->param == x || !free_in(x, a->body)) return RTerm();
  if (fv_v.count(a->param)) {
    Ident z = fresh_name();
    RTerm renamed = subst(a->param, rt::var(z), a->body);
    return rt::abs(z, subst(x, v, renamed));
  }
  RTerm body = subst_rec(x, v, fv_v, a->body);
  return body ? rt::abs(a->param, body) : RTerm();
}

const rterm::Const* ground_const(const RTerm& m) {
  auto* c = m.as<rterm::Const>();
  if (!c || !c->args.empty()) return nullptr;
  if (c->symbol == "int" || c->symbol == "bool" || c->symbol == "dummy") return c;
  return nullptr;
}

std::optional<std::int64_t> int_of(const RTerm& m) {
  auto* c = ground_const(m);
  if (c && c->symbol == "int") return c->payload;
  return std::nullopt;
}

std::optional<bool> bool_of(const RTerm& m) {
  auto* c = ground_const(m);
  if (c && c->symbol == "bool") return c->payload != 0;
  return std::nullopt;
}

template <class Op>
DeltaEntry int_binary(Op op) {
  return DeltaEntry{2, [op](const std::vector<RTerm>& a, RStore&) -> std::optional<RTerm> {
                      auto x = int_of(a[0]);
                      auto y = int_of(a[1]);
                      if (!x || !y) return std::nullopt;
                      return op(*x, *y);
                    }};
}

std::int64_t wrap(std::uint64_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

bool is_value(const RTerm& m) { return !m.is<rterm::App>(); }

bool is_closed(const RTerm& m) { return free_vars(m).empty(); }

std::size_t term_size(const RTerm& m) {
  if (auto* a = m.as<rterm::Abs>()) return 1 + term_size(a->body);
  if (auto* a = m.as<rterm::App>()) return 1 + term_size(a->fn) + term_size(a->arg);
  std::size_t n = 1;
  if (auto* c = m.as<rterm::Const>())
    for (const auto& arg : c->args) n += term_size(arg);
  return n;
}

bool rterm_equal(const RTerm& a, const RTerm& b) {
  if (a.get() == b.get()) return true;
  if (a.get()->v.index() != b.get()->v.index()) return false;
  if (auto* x = a.as<rterm::Var>()) return x->name == b.as<rterm::Var>()->name;
  if (auto* x = a.as<rterm::Abs>()) {
    auto* y = b.as<rterm::Abs>();
    return x->param == y->param && rterm_equal(x->body, y->body);
  }
  if (auto* x = a.as<rterm::App>()) {
    auto* y = b.as<rterm::App>();
    return rterm_equal(x->fn, y->fn) && rterm_equal(x->arg, y->arg);
  }
  auto* x = a.as<rterm::Const>();
  auto* y = b.as<rterm::Const>();
  if (x->symbol != y->symbol || x->payload != y->payload || x->args.size() != y->args.size())
    return false;
  for (std::size_t i = 0; i < x->args.size(); ++i)
    if (!rterm_equal(x->args[i], y->args[i])) return false;
  return true;
}

std::string to_string(const RTerm& m) {
  if (auto* v = m.as<rterm::Var>()) return v->name.name;
  if (auto* a = m.as<rterm::Abs>()) return "(\\" + a->param.name + ". " + to_string(a->body) + ")";
  if (auto* a = m.as<rterm::App>()) return "(" + to_string(a->fn) + " " + to_string(a->arg) + ")";
  auto* c = m.as<rterm::Const>();
  std::string head;
  if (c->symbol == "int") head = std::to_string(c->payload);
  else if (c->symbol == "bool") head = c->payload ? "true" : "false";
  else if (c->symbol == "dummy") head = "()";
  else head = c->symbol;
  if (c->args.empty()) return head;
  std::string out = "(" + head;
  for (const auto& arg : c->args) out += " " + to_string(arg);
  return out + ")";
}

bool is_ground(const RTerm& v) { return ground_const(v) != nullptr; }

std::string observe(const RTerm& v) { return is_ground(v) ? to_string(v) : "<fun>"; }

DeltaTable default_delta(const std::vector<std::string>& tags) {
  DeltaTable d;
  d["plus"] = int_binary([](std::int64_t a, std::int64_t b) {
    return rt::integer(wrap(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b)));
  });
  d["minus"] = int_binary([](std::int64_t a, std::int64_t b) {
    return rt::integer(wrap(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b)));
  });
  d["times"] = int_binary([](std::int64_t a, std::int64_t b) {
    return rt::integer(wrap(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b)));
  });
  d["leq"] = int_binary([](std::int64_t a, std::int64_t b) { return rt::boolean(a <= b); });
  d["lt"] = int_binary([](std::int64_t a, std::int64_t b) { return rt::boolean(a < b); });
  d["eq"] = DeltaEntry{2, [](const std::vector<RTerm>& a, RStore&) -> std::optional<RTerm> {
                         if (auto x = int_of(a[0]), y = int_of(a[1]); x && y)
                           return rt::boolean(*x == *y);
                         if (auto x = bool_of(a[0]), y = bool_of(a[1]); x && y)
                           return rt::boolean(*x == *y);
                         return std::nullopt;
                       }};
  d["SEL"] = DeltaEntry{3, [](const std::vector<RTerm>& a, RStore&) -> std::optional<RTerm> {
                          auto c = bool_of(a[0]);
                          if (!c) return std::nullopt;
                          return *c ? a[1] : a[2];
                        }};
  for (const auto& t : tags) {
    Tag tag{t};
    d["get:" + t] = DeltaEntry{1, [tag](const std::vector<RTerm>&, RStore& s) -> std::optional<RTerm> {
                                 try {
                                   return s.get(tag);
                                 } catch (const UnboundTagError&) {
                                   return std::nullopt;
                                 }
                               }};
    d["set:" + t] = DeltaEntry{1, [tag](const std::vector<RTerm>& a, RStore& s) -> std::optional<RTerm> {
                                 s.set(tag, a[0]);
                                 return a[0];
                               }};
  }
  return d;
}

RTerm subst(const Ident& x, const RTerm& v, const RTerm& m) {
  std::set<Ident> fv = free_vars(v);
  RTerm r = subst_rec(x, v, fv, m);
  return r ? r : m;
}

namespace {

StepResult step_rec(const RTerm& m, RTerm& out, RStore& s, const DeltaTable& delta) {
  auto* a = m.as<rterm::App>();
  if (!a) return StepResult::Value;
  RTerm next;
  switch (step_rec(a->fn, next, s, delta)) {
    case StepResult::Stepped: out = rt::app(next, a->arg); return StepResult::Stepped;
    case StepResult::Stuck: return StepResult::Stuck;
    case StepResult::Value: break;
  }
  switch (step_rec(a->arg, next, s, delta)) {
    case StepResult::Stepped: out = rt::app(a->fn, next); return StepResult::Stepped;
    case StepResult::Stuck: return StepResult::Stuck;
    case StepResult::Value: break;
  }
  if (auto* lam = a->fn.as<rterm::Abs>()) {
    out = subst(lam->param, a->arg, lam->body);
    return StepResult::Stepped;
  }
  auto* c = a->fn.as<rterm::Const>();
  if (!c) return StepResult::Stuck;
  auto it = delta.find(c->symbol);
  if (it == delta.end() || it->second.arity == 0) return StepResult::Stuck;
  std::vector<RTerm> args = c->args;
  args.push_back(a->arg);
  if (static_cast<int>(args.size()) < it->second.arity) {
    out = make_term<RTermNode>(rterm::Const{c->symbol, c->payload, std::move(args)});
    return StepResult::Stepped;
  }
  auto r = it->second.fn(args, s);
  if (!r) return StepResult::Stuck;
  out = *r;
  return StepResult::Stepped;
}

}  // namespace

StepResult step(RTerm& m, RStore& s, const DeltaTable& delta) {
  RTerm next;
  StepResult r = step_rec(m, next, s, delta);
  if (r == StepResult::Stepped) m = std::move(next);
  return r;
}

RunOutcome run(RTerm m, RStore s, const DeltaTable& delta, std::uint64_t budget,
               std::size_t max_size) {
  return with_large_stack([&] {
    RunOutcome out{RunOutcome::Timeout, m, s, 0};
    for (;;) {
      StepResult r = step(out.term, out.store, delta);
      if (r == StepResult::Value) { out.kind = RunOutcome::Value; return out; }
      if (r == StepResult::Stuck) { out.kind = RunOutcome::Stuck; return out; }
      if (++out.steps >= budget) return out;
      // Size checks are linear, so only sample them.
      if (out.steps % 64 == 0 && term_size(out.term) > max_size) return out;
    }
  });
}

RTerm comb_I() {
  static const RTerm t = rt::abs("x", rt::var("x"));
  return t;
}

RTerm comb_K() {
  static const RTerm t = rt::abs("x", rt::abs("y", rt::var("x")));
  return t;
}

RTerm comb_S() {
  static const RTerm t = rt::abs(
      "x", rt::abs("y", rt::abs("z", rt::app(rt::app(rt::var("x"), rt::var("z")),
                                             rt::app(rt::var("y"), rt::var("z"))))));
  return t;
}

RTerm delim(const Ident& x, const RTerm& m) {
  if (auto* v = m.as<rterm::Var>())
    return v->name == x ? comb_I() : rt::app(comb_K(), m);
  if (auto* a = m.as<rterm::App>())
    return rt::app(rt::app(comb_S(), delim(x, a->fn)), delim(x, a->arg));
  return rt::app(comb_K(), m);
}

RTerm celim(const RTerm& m) {
  if (auto* a = m.as<rterm::Abs>()) return delim(a->param, celim(a->body));
  if (auto* a = m.as<rterm::App>()) return rt::app(celim(a->fn), celim(a->arg));
  return m;
}

namespace {

std::vector<std::string> render_trace(const RStore& s) {
  return trace_lines(s, [](const RTerm& v) { return observe(v); });
}

std::map<std::string, std::string> render_store(const RStore& s) {
  return render_bindings(s, [](const RTerm& v) { return observe(v); });
}

const char* kind_name(RunOutcome::Kind k) {
  switch (k) {
    case RunOutcome::Value: return "value";
    case RunOutcome::Stuck: return "stuck";
    default: return "timeout";
  }
}

// Compares two result values. Functions are applied to a few ground probes
// and the results compared recursively.
Verdict compare_values(const RunOutcome& a, const RunOutcome& b, const DeltaTable& delta,
                       std::uint64_t budget, int depth) {
  if (render_trace(a.store) != render_trace(b.store))
    return {Verdict::Disagree, "store traces differ"};
  if (render_store(a.store) != render_store(b.store))
    return {Verdict::Disagree, "final stores differ"};
  if (a.kind == RunOutcome::Stuck) return {Verdict::Agree, ""};
  bool ga = is_ground(a.term), gb = is_ground(b.term);
  if (ga || gb) {
    if (observe(a.term) == observe(b.term)) return {Verdict::Agree, ""};
    return {Verdict::Disagree, "results " + observe(a.term) + " vs " + observe(b.term)};
  }
  if (depth == 0) return {Verdict::Agree, ""};
  static const std::vector<RTerm> probes = {rt::integer(0), rt::integer(3), rt::boolean(true)};
  bool inconclusive = false;
  for (const auto& p : probes) {
    RunOutcome x = run(rt::app(a.term, p), a.store, delta, budget);
    RunOutcome y = run(rt::app(b.term, p), b.store, delta, budget);
    if (x.kind == RunOutcome::Timeout || y.kind == RunOutcome::Timeout) {
      if (x.kind != y.kind) inconclusive = true;
      continue;
    }
    if (x.kind != y.kind)
      return {Verdict::Disagree, std::string("probe ") + to_string(p) + ": " +
                                     kind_name(x.kind) + " vs " + kind_name(y.kind)};
    Verdict v = compare_values(x, y, delta, budget, depth - 1);
    if (v.kind == Verdict::Disagree) return v;
    if (v.kind == Verdict::Inconclusive) inconclusive = true;
  }
  if (inconclusive) return {Verdict::Inconclusive, "a probe timed out on one side"};
  return {Verdict::Agree, ""};
}

}  // namespace

Verdict check_theorem(const RTerm& m, const RStore& s, const DeltaTable& delta,
                      std::uint64_t budget) {
  return with_large_stack([&]() -> Verdict {
    RunOutcome a = run(m, s, delta, budget);
    RunOutcome b = run(celim(m), s, delta, budget);
    if (a.kind == RunOutcome::Timeout && b.kind == RunOutcome::Timeout)
      return {Verdict::Agree, "both diverge"};
    if (a.kind == RunOutcome::Timeout || b.kind == RunOutcome::Timeout)
      return {Verdict::Inconclusive, "only one side exhausted the budget"};
    if (a.kind != b.kind)
      return {Verdict::Disagree,
              std::string("outcome ") + kind_name(a.kind) + " vs " + kind_name(b.kind)};
    return compare_values(a, b, delta, budget, 3);
  });
}

}  // namespace kombi
