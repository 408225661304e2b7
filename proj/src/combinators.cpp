// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <map>
#include <memory>
#include <stdexcept>

#include "elim.hpp"
#include "errors.hpp"

namespace kombi {

namespace {

std::shared_ptr<const CombSig> sig(const std::string& id, int arity) {
  return std::make_shared<const CombSig>(CombSig{id, arity, true});
}

std::string mask_name(const std::vector<bool>& mask, int n) {
  const std::size_t k = mask.size();
  if (k == 2 && n == 1) {
    if (mask[0] && mask[1]) return "S";
    if (!mask[0] && mask[1]) return "B";
    if (mask[0] && !mask[1]) return "C";
    return "N";
  }
  std::string base = k == 2 ? "S" : "S2";
  if (n == 2) base += "^2";
  bool all = true;
  for (bool b : mask) all = all && b;
  if (all) return base;
  base += ".";
  for (bool b : mask) base += b ? '1' : '0';
  return base;
}

CombinatorDef build_mask(const std::vector<bool>& mask, int n) {
  const int k = static_cast<int>(mask.size());
  CombinatorDef d;
  d.comb_id = mask_name(mask, n);
  d.total_arity = k + n;
  d.value = make_curried(sig(d.comb_id, k + n), [mask, k, n](CurriedArgs a) {
    auto branch = [&](int i) {
      Value b = a[i];
      if (mask[i])
        for (int j = 0; j < n; ++j) b = apply(b, a[k + j]);
      return b;
    };
    Value r = branch(0);
    for (int i = 1; i < k; ++i) {
      Value arg = branch(i);
      r = apply(r, arg);
    }
    return r;
  });

  auto bname = [](int i) { return "b" + std::to_string(i); };
  auto xname = [](int j) { return "x" + std::to_string(j); };
  auto rbranch = [&](int i) {
    RTerm b = rt::var(bname(i));
    if (mask[i])
      for (int j = 0; j < n; ++j) b = rt::app(b, rt::var(xname(j)));
    return b;
  };
  RTerm body = rbranch(0);
  for (int i = 1; i < k; ++i) body = rt::app(body, rbranch(i));
  for (int j = n - 1; j >= 0; --j) body = rt::abs(xname(j), body);
  for (int i = k - 1; i >= 0; --i) body = rt::abs(bname(i), body);
  d.defining_term = body;
  for (int i = 0; i < k; ++i)
    if (!mask[i]) d.constant_positions.push_back(i);
  return d;
}

// Selects between two functions on a boolean test of its arguments and
// passes those arguments on: λf.λg.λh.λx1..λxn.((f x..) ? g : h) x..
CombinatorDef build_sif(int n) {
  CombinatorDef d;
  d.comb_id = n == 1 ? "SIF" : "SIF^2";
  d.total_arity = 3 + n;
  d.value = make_curried(sig(d.comb_id, 3 + n), [n](CurriedArgs a) {
    Value c = a[0];
    for (int j = 0; j < n; ++j) c = apply(c, a[3 + j]);
    Value r = c.as_bool() ? a[1] : a[2];
    for (int j = 0; j < n; ++j) r = apply(r, a[3 + j]);
    return r;
  });
  auto xname = [](int j) { return "x" + std::to_string(j); };
  RTerm test = rt::var("f");
  for (int j = 0; j < n; ++j) test = rt::app(test, rt::var(xname(j)));
  RTerm body = rt::app(rt::sym("SEL"), test, rt::var("g"), rt::var("h"));
  for (int j = 0; j < n; ++j) body = rt::app(body, rt::var(xname(j)));
  for (int j = n - 1; j >= 0; --j) body = rt::abs(xname(j), body);
  d.defining_term = rt::abs("f", rt::abs("g", rt::abs("h", body)));
  return d;
}

// λx.λy1..λyn.x
CombinatorDef build_k(int n) {
  CombinatorDef d;
  d.comb_id = n == 1 ? "K" : "K^" + std::to_string(n);
  d.total_arity = 1 + n;
  d.value = make_curried(sig(d.comb_id, 1 + n), [](CurriedArgs a) { return a[0]; });
  RTerm body = rt::var("x");
  for (int j = n; j >= 1; --j) body = rt::abs("y" + std::to_string(j), body);
  d.defining_term = rt::abs("x", body);
  d.constant_positions = {0};
  return d;
}

// λx.λy.x for the (i^2) rule. It behaves like K, but its first argument is
// the abstracted variable rather than a constant, so nothing is held back.
CombinatorDef build_i2() {
  CombinatorDef d = build_k(1);
  d.comb_id = "I^2";
  d.value = make_curried(sig("I^2", 2), [](CurriedArgs a) { return a[0]; });
  d.constant_positions.clear();
  return d;
}

CombinatorDef build_i() {
  CombinatorDef d;
  d.comb_id = "I";
  d.total_arity = 1;
  d.value = Value::fun([](const Value& x) { return x; }, CombMeta{sig("I", 1), 0});
  d.defining_term = rt::abs("x", rt::var("x"));
  return d;
}

std::vector<std::vector<bool>> all_masks(int k) {
  std::vector<std::vector<bool>> out;
  for (int bits = (1 << k) - 1; bits >= 0; --bits) {
    std::vector<bool> m(k);
    for (int i = 0; i < k; ++i) m[i] = (bits >> (k - 1 - i)) & 1;
    out.push_back(m);
  }
  return out;
}

struct Table {
  std::map<std::string, CombinatorDef> by_id;
  std::vector<std::string> fab, c1, c2;

  void add(std::vector<std::string>& roster, const CombinatorDef& d) {
    by_id.emplace(d.comb_id, d);
    roster.push_back(d.comb_id);
  }

  Table() {
    for (auto d : {build_i(), build_k(1), build_mask({true, true}, 1)}) add(fab, d);
    c1 = fab;
    for (const auto& m : all_masks(2))
      if (!(m[0] && m[1])) add(c1, build_mask(m, 1));
    add(c1, build_sif(1));
    c2 = c1;
    for (const auto& m : all_masks(3)) add(c2, build_mask(m, 1));
    for (const auto& m : all_masks(2)) add(c2, build_mask(m, 2));
    add(c2, build_mask({true, true, true}, 2));
    add(c2, build_sif(2));
    add(c2, build_k(2));
    add(c2, build_i2());
  }
};

const Table& table() {
  static const Table t;
  return t;
}

}  // namespace

const char* algo_name(ElimAlgo algo) {
  switch (algo) {
    case ElimAlgo::FAB: return "fab";
    case ElimAlgo::C1: return "c1";
    default: return "c2";
  }
}

const CombinatorDef& combinator(const std::string& id) {
  auto it = table().by_id.find(id);
  if (it == table().by_id.end()) throw std::out_of_range("no combinator '" + id + "'");
  return it->second;
}

std::vector<CombinatorDef> make_combinators(ElimAlgo algo) {
  const Table& t = table();
  const auto& ids = algo == ElimAlgo::FAB ? t.fab : algo == ElimAlgo::C1 ? t.c1 : t.c2;
  std::vector<CombinatorDef> out;
  for (const auto& id : ids) out.push_back(t.by_id.at(id));
  return out;
}

const CombinatorDef& mask_combinator(const std::vector<bool>& mask, int n) {
  return combinator(mask_name(mask, n));
}

PExpr hand_combinator(HandMade kind, const std::vector<Value>& consts) {
  switch (kind) {
    case HandMade::K_c: {
      Value c = consts.at(0);
      return px::constant(
          Value::fun([c](const Value&) { return c; }, CombMeta{sig("K_c", 1), 0}));
    }
    case HandMade::B_c: {
      Value c = consts.at(0);
      return px::constant(make_curried(sig("B_c", 2), [c](CurriedArgs a) {
        return apply(c, apply(a[0], a[1]));
      }));
    }
    case HandMade::C_c: {
      Value c = consts.at(0);
      return px::constant(make_curried(sig("C_c", 2), [c](CurriedArgs a) {
        return apply(apply(a[0], a[1]), c);
      }));
    }
    case HandMade::N_c: {
      Value c1 = consts.at(0), c2 = consts.at(1);
      return px::constant(
          Value::fun([c1, c2](const Value&) { return apply(c1, c2); }, CombMeta{sig("N_c", 1), 0}));
    }
  }
  throw UnexpectedError("unknown hand-made combinator");
}

}  // namespace kombi
