// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "quickgen.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include "externs.hpp"
#include "frontend.hpp"

namespace kombi {

namespace {

enum class Ty { Int, Bool, FunII, FunIII, List };
constexpr Ty kAllTypes[] = {Ty::Int, Ty::Bool, Ty::FunII, Ty::FunIII, Ty::List};

enum class Kind { Leaf, Op, App, Binder, Cond, Effect, Skeleton };

Expr ext(const char* name) { return ex::constant(extern_value(name)); }

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (std::abs(cfg.weights.sum() - 1.0) > 1e-9)
      throw std::invalid_argument("generator weights must sum to 1");
  }

  Expr top() {
    if (cfg_.max_depth <= 0) return ex::integer(small_int());
    Ty t = chance(0.75) ? Ty::Int : pick_type();
    return gen(t, cfg_.max_depth);
  }

 private:
  using Scope = std::vector<std::pair<std::string, Ty>>;

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform() < p; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  std::int64_t small_int() { return static_cast<std::int64_t>(below(14)) - 3; }

  Ty pick_type() {
    for (;;) {
      Ty t = kAllTypes[below(std::size(kAllTypes))];
      if (t != Ty::List || cfg_.allow_library) return t;
    }
  }

  std::string fresh_var() { return "x" + std::to_string(below(std::max(1, cfg_.var_pool))); }
  std::string tag() { return "r" + std::to_string(below(std::max(1, cfg_.tag_pool))); }

  // Visible variables of type t, honouring shadowing.
  std::vector<std::string> vars_of(Ty t) const {
    std::vector<std::string> out, seen;
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (std::find(seen.begin(), seen.end(), it->first) != seen.end()) continue;
      seen.push_back(it->first);
      if (it->second == t) out.push_back(it->first);
    }
    return out;
  }

  template <class F>
  Expr bind(const std::string& name, Ty t, F&& body) {
    scope_.emplace_back(name, t);
    Expr b = body();
    scope_.pop_back();
    return ex::abs(name, b);
  }

  Kind pick_kind() {
    const GenWeights& w = cfg_.weights;
    double effect = cfg_.allow_effects ? w.effect : 0.0;
    double total = w.sum() - w.effect + effect;
    double r = uniform() * total;
    std::pair<Kind, double> table[] = {{Kind::Leaf, w.leaf}, {Kind::Op, w.op},
                                       {Kind::App, w.app},   {Kind::Binder, w.binder},
                                       {Kind::Cond, w.cond}, {Kind::Effect, effect},
                                       {Kind::Skeleton, w.skeleton}};
    for (auto [k, p] : table) {
      if (r < p) return k;
      r -= p;
    }
    return Kind::Leaf;
  }

  Expr gen(Ty t, int depth) {
    if (depth <= 0) return leaf(t);
    if (chance(cfg_.diverge)) return omega();
    if (chance(cfg_.noise)) {
      Ty other = pick_type();
      if (other != t) return gen(other, depth - 1);
    }
    const int d = depth - 1;
    switch (pick_kind()) {
      case Kind::Leaf: return leaf(t);
      case Kind::Op: return op(t, d);
      case Kind::App: return application(t, d);
      case Kind::Binder: return binder(t, d);
      case Kind::Cond: return ex::if_(gen(Ty::Bool, d), gen(t, d), gen(t, d));
      case Kind::Effect: return effect(t, d);
      case Kind::Skeleton: return skeleton(t, d);
    }
    return leaf(t);
  }

  Expr leaf(Ty t) {
    auto vars = vars_of(t);
    if (!vars.empty() && chance(0.6)) return ex::var(vars[below(vars.size())]);
    switch (t) {
      case Ty::Int: return ex::integer(small_int());
      case Ty::Bool: return ex::boolean(chance(0.5));
      case Ty::FunII: {
        std::string x = fresh_var();
        return bind(x, Ty::Int, [&] { return chance(0.5) ? ex::var(x) : ex::integer(small_int()); });
      }
      case Ty::FunIII: {
        static const char* ops[] = {"plus", "minus", "times"};
        return ext(ops[below(3)]);
      }
      case Ty::List: return ext("nil");
    }
    return ex::integer(0);
  }

  Expr op(Ty t, int d) {
    switch (t) {
      case Ty::Int: {
        if (cfg_.allow_library && chance(0.1)) return ex::app(ext("head"), gen(Ty::List, d));
        static const char* ops[] = {"plus", "minus", "times"};
        return ex::app(ext(ops[below(3)]), gen(Ty::Int, d), gen(Ty::Int, d));
      }
      case Ty::Bool: {
        if (cfg_.allow_library && chance(0.15)) return ex::app(ext("isnil"), gen(Ty::List, d));
        if (chance(0.15)) return ex::app(ext("eq"), gen(Ty::Bool, d), gen(Ty::Bool, d));
        static const char* ops[] = {"leq", "lt", "eq"};
        return ex::app(ext(ops[below(3)]), gen(Ty::Int, d), gen(Ty::Int, d));
      }
      case Ty::FunII: {
        if (cfg_.allow_library && chance(0.3))
          return ex::app(ext("compose"), gen(Ty::FunII, d), gen(Ty::FunII, d));
        static const char* ops[] = {"plus", "minus", "times"};
        return ex::app(ext(ops[below(3)]), gen(Ty::Int, d));
      }
      case Ty::FunIII: return leaf(t);
      case Ty::List: {
        double r = uniform();
        if (r < 0.4) return ex::app(ext("cons"), gen(Ty::Int, d), gen(Ty::List, d));
        if (r < 0.6) return ex::app(ext("tail"), gen(Ty::List, d));
        if (r < 0.8) {
          std::string x = fresh_var();
          Expr pred = bind(x, Ty::Int, [&] { return gen(Ty::Bool, d); });
          return ex::app(ext("filter"), pred, gen(Ty::List, d));
        }
        Expr list = ext("nil");
        for (std::size_t n = below(4); n > 0; --n)
          list = ex::app(ext("cons"), gen(Ty::Int, d), list);
        return list;
      }
    }
    return leaf(t);
  }

  Expr application(Ty t, int d) {
    switch (t) {
      case Ty::Int:
        if (chance(0.5)) return ex::app(gen(Ty::FunII, d), gen(Ty::Int, d));
        return ex::app(gen(Ty::FunIII, d), gen(Ty::Int, d), gen(Ty::Int, d));
      case Ty::FunII: return ex::app(gen(Ty::FunIII, d), gen(Ty::Int, d));
      default: return binder(t, d);
    }
  }

  // (\x. body) arg, a sequence, or an abstraction when t is a function type.
  Expr binder(Ty t, int d) {
    if (t == Ty::FunII && chance(0.6)) {
      std::string x = fresh_var();
      return bind(x, Ty::Int, [&] { return gen(Ty::Int, d); });
    }
    if (t == Ty::FunIII && chance(0.6)) {
      std::string x = fresh_var(), y = fresh_var();
      return bind(x, Ty::Int, [&] { return bind(y, Ty::Int, [&] { return gen(Ty::Int, d); }); });
    }
    if (chance(0.3)) {
      Expr first = gen(pick_type(), d);
      return ex::app(ex::abs("%seq", gen(t, d)), first);
    }
    Ty arg_ty = pick_type();
    Expr arg = gen(arg_ty, d);
    std::string x = fresh_var();
    return ex::app(bind(x, arg_ty, [&] { return gen(t, d); }), arg);
  }

  Expr effect(Ty t, int d) {
    if (t == Ty::Int) {
      if (chance(0.5)) return ex::get(tag());
      return ex::set(tag(), gen(Ty::Int, d));
    }
    Expr first = chance(0.5) ? ex::set(tag(), gen(Ty::Int, d)) : ex::get(tag());
    return ex::app(ex::abs("%seq", gen(t, d)), first);
  }

  Expr skeleton(Ty t, int d) {
    if (t == Ty::Int) {
      double r = uniform();
      if (r < 0.4) return countdown(d);
      if (r < 0.7) {
        Expr twice = ex::abs("twf", ex::abs("twx", ex::app(ex::var("twf"),
                                                           ex::app(ex::var("twf"), ex::var("twx")))));
        return ex::app(twice, gen(Ty::FunII, d), gen(Ty::Int, d));
      }
      if (cfg_.allow_library)
        return ex::app(ex::app(ext("compose"), gen(Ty::FunII, d), gen(Ty::FunII, d)),
                       gen(Ty::Int, d));
      return ex::app(gen(Ty::FunII, d), gen(Ty::Int, d));
    }
    if (t == Ty::FunII) {
      Expr twice = ex::abs("twf", ex::abs("twx", ex::app(ex::var("twf"),
                                                         ex::app(ex::var("twf"), ex::var("twx")))));
      return ex::app(twice, gen(Ty::FunII, d));
    }
    return gen(t, d);
  }

  // Bounded recursion through self-application:
  // ((\f. f f) (\rec.\n. if n <= 0 then base else step n (rec rec (n - 1)))) k
  Expr countdown(int d) {
    std::string n = fresh_var();
    scope_.emplace_back(n, Ty::Int);
    Expr base = gen(Ty::Int, d / 2);
    Expr step = gen(Ty::FunIII, d / 2);
    Expr body = ex::if_(
        ex::app(ext("leq"), ex::var(n), ex::integer(0)), base,
        ex::app(step, ex::var(n),
                ex::app(ex::app(ex::var("rec"), ex::var("rec")),
                        ex::app(ext("minus"), ex::var(n), ex::integer(1)))));
    scope_.pop_back();
    Expr fn = ex::abs("rec", ex::abs(n, body));
    Expr omega_head = ex::abs("self", ex::app(ex::var("self"), ex::var("self")));
    return ex::app(ex::app(omega_head, fn), ex::integer(static_cast<std::int64_t>(below(5))));
  }

  Expr omega() {
    Expr w = ex::abs("w", ex::app(ex::var("w"), ex::var("w")));
    return ex::app(w, w);
  }

  GenConfig cfg_;
  std::mt19937_64 rng_;
  Scope scope_;
};

}  // namespace

Expr gen_expr(const GenConfig& cfg) { return Generator(cfg).top(); }

std::vector<std::string> gen_tags(const GenConfig& cfg) {
  std::vector<std::string> out;
  for (int i = 0; i < std::max(1, cfg.tag_pool); ++i) out.push_back("r" + std::to_string(i));
  return out;
}

RTerm to_rterm(const Expr& e) {
  return e.visit([&](const auto& n) -> RTerm {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, expr::Const>) {
      if (n.value.is_int()) return rt::integer(n.value.as_int());
      if (n.value.is_bool()) return rt::boolean(n.value.as_bool());
      if (n.value.is_dummy()) return rt::dummy();
      const auto& meta = n.value.meta();
      static const char* known[] = {"plus", "minus", "times", "leq", "lt", "eq"};
      if (meta && meta->args_seen == 0)
        for (const char* k : known)
          if (meta->comb_id() == k) return rt::sym(k);
      throw std::invalid_argument("constant " + to_string(n.value) + " has no delta entry");
    } else if constexpr (std::is_same_v<T, expr::Var>) {
      return rt::var(n.name);
    } else if constexpr (std::is_same_v<T, expr::Abs>) {
      return rt::abs(n.param, to_rterm(n.body));
    } else if constexpr (std::is_same_v<T, expr::App>) {
      return rt::app(to_rterm(n.fn), to_rterm(n.arg));
    } else if constexpr (std::is_same_v<T, expr::If>) {
      RTerm sel = rt::app(rt::sym("SEL"), to_rterm(n.cond), rt::abs("%d", to_rterm(n.then_branch)),
                          rt::abs("%d", to_rterm(n.else_branch)));
      return rt::app(sel, rt::dummy());
    } else if constexpr (std::is_same_v<T, expr::Get>) {
      return rt::app(rt::sym("get:" + n.tag.name), rt::dummy());
    } else {
      return rt::app(rt::sym("set:" + n.tag.name), to_rterm(n.value));
    }
  });
}

RTerm gen_rterm(const GenConfig& cfg) {
  GenConfig c = cfg;
  c.allow_library = false;
  return to_rterm(gen_expr(c));
}

namespace {

// Direct subterms of e.
std::vector<Expr> children(const Expr& e) {
  return e.visit([](const auto& n) -> std::vector<Expr> {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, expr::Abs>) return {n.body};
    else if constexpr (std::is_same_v<T, expr::App>) return {n.fn, n.arg};
    else if constexpr (std::is_same_v<T, expr::If>) return {n.cond, n.then_branch, n.else_branch};
    else if constexpr (std::is_same_v<T, expr::Set>) return {n.value};
    else return {};
  });
}

Expr with_child(const Expr& e, std::size_t i, const Expr& c) {
  return e.visit([&](const auto& n) -> Expr {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, expr::Abs>) {
      return ex::abs(n.param.name, c);
    } else if constexpr (std::is_same_v<T, expr::App>) {
      return i == 0 ? ex::app(c, n.arg) : ex::app(n.fn, c);
    } else if constexpr (std::is_same_v<T, expr::If>) {
      return ex::if_(i == 0 ? c : n.cond, i == 1 ? c : n.then_branch, i == 2 ? c : n.else_branch);
    } else if constexpr (std::is_same_v<T, expr::Set>) {
      return ex::set(n.tag.name, c);
    } else {
      return e;
    }
  });
}

// All terms obtained by one local simplification somewhere in e.
void candidates(const Expr& e, std::vector<Expr>& out) {
  auto kids = children(e);
  for (const auto& k : kids) out.push_back(k);
  if (!e.is<expr::Const>()) out.push_back(ex::integer(0));
  for (std::size_t i = 0; i < kids.size(); ++i) {
    std::vector<Expr> sub;
    candidates(kids[i], sub);
    for (const auto& s : sub) out.push_back(with_child(e, i, s));
  }
}

}  // namespace

Expr shrink(const Expr& e, const std::function<bool(const Expr&)>& fails, int max_rounds) {
  Expr cur = e;
  for (int round = 0; round < max_rounds; ++round) {
    std::vector<Expr> cands;
    candidates(cur, cands);
    bool improved = false;
    for (const auto& c : cands) {
      if (!free_vars(c).empty()) continue;
      if (fails(c)) {
        cur = c;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return cur;
}

bool write_counterexample(const std::string& path, const Expr& e, const std::string& note) {
  std::ofstream out(path);
  if (!out) return false;
  std::string comment = note;
  for (auto& ch : comment)
    if (ch == '\n') ch = ' ';
  out << "# " << comment << '\n' << to_source(e) << '\n';
  return bool(out);
}

}  // namespace kombi
