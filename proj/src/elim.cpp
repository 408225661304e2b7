// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "elim.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "purify.hpp"

namespace kombi {

ElimOptions ElimOptions::defaults(ElimAlgo algo) {
  ElimOptions o;
  o.algo = algo;
  o.pre_eval = algo != ElimAlgo::FAB;
  return o;
}

namespace {

bool foldable(const Value& f) {
  const auto& m = f.meta();
  return m && m->pure() && m->args_seen + 1 < m->total_arity();
}

// Whether `e` mentions any of `xs`, counting the variables a hole may use.
bool mentions(const PExpr& e, const std::set<Ident>& xs) {
  if (auto* v = e.as<pexpr::Var>()) {
    if (xs.count(v->name)) return true;
    if (!is_hole(v->name)) return false;
    for (const auto& h : hole_vars(v->name))
      if (xs.count(h)) return true;
    return false;
  }
  if (auto* a = e.as<pexpr::Abs>()) {
    std::set<Ident> inner = xs;
    inner.erase(a->param);
    return !inner.empty() && mentions(a->body, inner);
  }
  if (auto* a = e.as<pexpr::App>()) return mentions(a->fn, xs) || mentions(a->arg, xs);
  return false;
}

// Constants and variables other than `xs`: values that may be passed to a
// combinator unevaluated.
bool atom_without(const PExpr& e, const std::set<Ident>& xs) {
  if (e.is<pexpr::Const>()) return true;
  return e.is<pexpr::Var>() && !mentions(e, xs);
}

struct IfParts {
  PExpr cond, then_body, else_body;
};

// IF c (λ%d.t) (λ%d.e), as produced by purify.
std::optional<IfParts> match_if(const PExpr& e) {
  auto* outer = e.as<pexpr::App>();
  if (!outer) return std::nullopt;
  auto* mid = outer->fn.as<pexpr::App>();
  if (!mid) return std::nullopt;
  auto* inner = mid->fn.as<pexpr::App>();
  if (!inner) return std::nullopt;
  auto* head = inner->fn.as<pexpr::Const>();
  if (!head || !is_fun_if(head->value)) return std::nullopt;
  auto* t = mid->arg.as<pexpr::Abs>();
  auto* f = outer->arg.as<pexpr::Abs>();
  if (!t || !f || t->param != kDummyBinder || f->param != kDummyBinder) return std::nullopt;
  return IfParts{inner->arg, t->body, f->body};
}

// Branches of an application spine of exactly `k` arguments' worth:
// (e1 e2) for k=2, ((e1 e2) e3) for k=3.
std::optional<std::vector<PExpr>> match_spine(const PExpr& e, int k) {
  std::vector<PExpr> rev;
  PExpr cur = e;
  for (int i = 1; i < k; ++i) {
    auto* a = cur.as<pexpr::App>();
    if (!a) return std::nullopt;
    rev.push_back(a->arg);
    cur = a->fn;
  }
  rev.push_back(cur);
  return std::vector<PExpr>(rev.rbegin(), rev.rend());
}

class Eliminator {
 public:
  explicit Eliminator(const ElimOptions& o) : opts_(o) {}

  PExpr elim(const PExpr& e) {
    if (auto* a = e.as<pexpr::App>()) return mk_app(elim(a->fn), elim(a->arg));
    if (auto* a = e.as<pexpr::Abs>()) return abstract(a->param, a->body);
    return e;
  }

  PExpr mk_app(PExpr f, PExpr a) {
    if (opts_.pre_eval) {
      auto* fc = f.as<pexpr::Const>();
      auto* ac = a.as<pexpr::Const>();
      if (fc && ac && foldable(fc->value)) return px::constant(apply(fc->value, ac->value));
    }
    return px::app(std::move(f), std::move(a));
  }

 private:
  bool extended() const { return opts_.algo != ElimAlgo::FAB; }
  bool multi() const { return opts_.algo == ElimAlgo::C2; }

  PExpr comb(const std::string& id) { return px::constant(combinator(id).value); }

  PExpr apply_all(PExpr head, const std::vector<PExpr>& args) {
    for (const auto& a : args) head = mk_app(std::move(head), a);
    return head;
  }

  bool hand_const(const PExpr& e) const { return opts_.hand_made && e.is<pexpr::Const>(); }
  static const Value& const_of(const PExpr& e) { return e.as<pexpr::Const>()->value; }

  // λx.body
  PExpr abstract(const Ident& x, const PExpr& body) {
    if (auto* v = body.as<pexpr::Var>()) {
      if (v->name == x) return comb("I");
      if (is_hole(v->name) && mentions(body, {x})) {
        std::set<Ident> rest = hole_vars(v->name);
        rest.erase(x);
        return px::var(make_hole("[\\" + x.name + "." + hole_display(v->name) + "]", rest));
      }
    }
    if (atom_without(body, {x})) {
      if (extended() && hand_const(body)) return hand_combinator(HandMade::K_c, {const_of(body)});
      return mk_app(comb("K"), body);
    }

    if (multi())
      if (auto* inner = body.as<pexpr::Abs>(); inner && inner->param != x) {
        if (auto r = abstract2(x, inner->param, inner->body)) return *r;
      }

    if (extended())
      if (auto parts = match_if(body)) {
        return apply_all(comb("SIF"), {abstract(x, parts->cond), abstract(x, parts->then_body),
                                       abstract(x, parts->else_body)});
      }

    if (multi())
      if (auto br = match_spine(body, 3)) return distribute(*br, {x});

    if (auto* a = body.as<pexpr::App>()) {
      if (!extended())
        return apply_all(comb("S"), {abstract(x, a->fn), abstract(x, a->arg)});
      return distribute({a->fn, a->arg}, {x});
    }

    // Nested abstraction: eliminate the inner binder first.
    return abstract(x, elim(body));
  }

  // λx.λy.body, for the multi-abstraction rules; empty if none applies.
  std::optional<PExpr> abstract2(const Ident& x, const Ident& y, const PExpr& body) {
    if (auto* v = body.as<pexpr::Var>(); v && v->name == x) return comb("I^2");
    if (atom_without(body, {x, y})) return mk_app(comb("K^2"), body);
    auto both = [&](const PExpr& e) { return abstract(x, px::abs(y, e)); };
    if (auto parts = match_if(body))
      return apply_all(comb("SIF^2"),
                       {both(parts->cond), both(parts->then_body), both(parts->else_body)});
    if (auto br = match_spine(body, 3))
      return apply_all(comb("S2^2"), {both((*br)[0]), both((*br)[1]), both((*br)[2])});
    if (auto br = match_spine(body, 2)) return distribute(*br, {x, y});
    return std::nullopt;
  }

  // Selective distribution of the binders `xs` (outermost first) over the
  // branches of an application. Branches that are atoms free of the binders
  // are passed as they are.
  PExpr distribute(const std::vector<PExpr>& branches, const std::vector<Ident>& xs) {
    const int n = static_cast<int>(xs.size());
    const std::set<Ident> bound(xs.begin(), xs.end());
    std::vector<bool> mask;
    for (const auto& b : branches) mask.push_back(!atom_without(b, bound));

    if (opts_.hand_made && n == 1 && branches.size() == 2) {
      const PExpr& c1 = branches[0];
      const PExpr& c2 = branches[1];
      if (!mask[0] && !mask[1] && hand_const(c1) && hand_const(c2))
        return hand_combinator(HandMade::N_c, {const_of(c1), const_of(c2)});
      if (!mask[0] && mask[1] && hand_const(c1))
        return mk_app(hand_combinator(HandMade::B_c, {const_of(c1)}), abstract(xs[0], c2));
      if (mask[0] && !mask[1] && hand_const(c2))
        return mk_app(hand_combinator(HandMade::C_c, {const_of(c2)}), abstract(xs[0], c1));
    }

    std::vector<PExpr> args;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      if (!mask[i]) {
        args.push_back(branches[i]);
      } else if (n == 1) {
        args.push_back(abstract(xs[0], branches[i]));
      } else {
        args.push_back(abstract(xs[0], px::abs(xs[1], branches[i])));
      }
    }
    return apply_all(px::constant(mask_combinator(mask, n).value), args);
  }

 private:
  ElimOptions opts_;
};

}  // namespace

PExpr elim(const PExpr& e, const ElimOptions& opts) {
  Eliminator el(opts);
  return el.elim(e);
}

PExpr elim(const PExpr& e, ElimAlgo algo) { return elim(e, ElimOptions::defaults(algo)); }

PExpr pre_eval_app(const PExpr& e) {
  ElimOptions o;
  o.pre_eval = true;
  Eliminator el(o);
  struct Walk {
    Eliminator& el;
    PExpr operator()(const PExpr& e) {
      if (auto* a = e.as<pexpr::App>()) return el.mk_app((*this)(a->fn), (*this)(a->arg));
      if (auto* a = e.as<pexpr::Abs>()) return px::abs(a->param, (*this)(a->body));
      return e;
    }
  };
  return Walk{el}(e);
}

MExpr check_no_var(const PExpr& e) {
  if (auto* c = e.as<pexpr::Const>()) return mx::constant(c->value);
  if (auto* a = e.as<pexpr::App>()) return mx::app(check_no_var(a->fn), check_no_var(a->arg));
  if (auto* v = e.as<pexpr::Var>())
    throw UnexpectedError("variable '" + v->name.name + "' survived elimination");
  throw UnexpectedError("abstraction survived elimination");
}

MExpr transform(const PExpr& e, const ElimOptions& opts) { return check_no_var(elim(e, opts)); }

MExpr transform(const PExpr& e, ElimAlgo algo) {
  return transform(e, ElimOptions::defaults(algo));
}

std::vector<std::string> cbv_violations(const MExpr& e) {
  std::vector<std::string> out;
  struct Walk {
    std::vector<std::string>& out;
    void operator()(const MExpr& e) {
      std::vector<MExpr> args;
      MExpr head = e;
      while (auto* a = head.as<mexpr::App>()) {
        args.push_back(a->arg);
        head = a->fn;
      }
      std::reverse(args.begin(), args.end());
      const Value& hv = head.as<mexpr::Const>()->value;
      if (const auto& meta = hv.meta()) {
        const CombinatorDef* def = nullptr;
        try {
          def = &combinator(meta->comb_id());
        } catch (const std::out_of_range&) {
        }
        if (def)
          for (std::size_t j = 0; j < args.size(); ++j) {
            int pos = meta->args_seen + static_cast<int>(j);
            bool constant_slot = std::find(def->constant_positions.begin(),
                                           def->constant_positions.end(),
                                           pos) != def->constant_positions.end();
            if (constant_slot && !args[j].is<mexpr::Const>())
              out.push_back("application in constant position " + std::to_string(pos) +
                            " of " + def->comb_id + ": " + to_term_string(args[j]));
          }
      }
      for (const auto& a : args) (*this)(a);
    }
  };
  Walk{out}(e);
  return out;
}

}  // namespace kombi
