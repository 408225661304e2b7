// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "externs.hpp"

#include <cstdint>
#include <memory>

#include "errors.hpp"

namespace kombi {

namespace {

std::int64_t wrap(std::uint64_t x) { return static_cast<std::int64_t>(x); }

template <class Op>
ExternDef binary(const std::string& name, Op op) {
  auto sig = std::make_shared<const CombSig>(CombSig{name, 2, true});
  return ExternDef{name,
                   make_curried(sig, [op](CurriedArgs a) { return op(a[0], a[1]); }),
                   2, true};
}

template <class Op>
ExternDef unary(const std::string& name, Op op) {
  auto sig = std::make_shared<const CombSig>(CombSig{name, 1, true});
  return ExternDef{name,
                   make_curried(sig, [op](CurriedArgs a) { return op(a[0]); }),
                   1, true};
}

Value checked_head(const Value& l) {
  const List& list = l.as_list();
  if (list.empty()) throw TypeError("head of empty list");
  return list.cells->head;
}

Value checked_tail(const Value& l) {
  const List& list = l.as_list();
  if (list.empty()) throw TypeError("tail of empty list");
  return Value::list(list.cells->tail);
}

Value filter_list(const Value& pred, const Value& l) {
  std::vector<Value> kept;
  for (const ConsCell* c = l.as_list().cells.get(); c; c = c->tail.get())
    if (apply(pred, c->head).as_bool()) kept.push_back(c->head);
  return Value::from_vector(kept);
}

std::map<std::string, ExternDef> build() {
  std::map<std::string, ExternDef> r;
  auto add = [&](ExternDef d) { r.emplace(d.name, std::move(d)); };

  add(binary("plus", [](const Value& a, const Value& b) {
    return Value::integer(wrap(static_cast<std::uint64_t>(a.as_int()) +
                               static_cast<std::uint64_t>(b.as_int())));
  }));
  add(binary("minus", [](const Value& a, const Value& b) {
    return Value::integer(wrap(static_cast<std::uint64_t>(a.as_int()) -
                               static_cast<std::uint64_t>(b.as_int())));
  }));
  add(binary("times", [](const Value& a, const Value& b) {
    return Value::integer(wrap(static_cast<std::uint64_t>(a.as_int()) *
                               static_cast<std::uint64_t>(b.as_int())));
  }));
  add(binary("leq", [](const Value& a, const Value& b) {
    return Value::boolean(a.as_int() <= b.as_int());
  }));
  add(binary("lt", [](const Value& a, const Value& b) {
    return Value::boolean(a.as_int() < b.as_int());
  }));
  add(binary("eq", [](const Value& a, const Value& b) {
    if (a.is_bool() && b.is_bool()) return Value::boolean(a.as_bool() == b.as_bool());
    return Value::boolean(a.as_int() == b.as_int());
  }));
  add(binary("cons", [](const Value& h, const Value& t) { return cons(h, t); }));
  add(unary("head", checked_head));
  add(unary("tail", checked_tail));
  add(unary("isnil", [](const Value& l) { return Value::boolean(l.as_list().empty()); }));
  add(binary("filter", filter_list));
  add(ExternDef{"nil", Value::nil(), 0, true});
  add(ExternDef{"compose", compose_embed(), 3, false});
  return r;
}

}  // namespace

Value compose_embed() {
  // Arguments are checked as they arrive, so a partial application can fail;
  // the metadata therefore marks it impure and pre-evaluation leaves it alone.
  auto sig = std::make_shared<const CombSig>(CombSig{"compose", 3, false});
  return Value::fun(
      [sig](const Value& f) {
        f.as_fun();
        return Value::fun(
            [sig, f](const Value& g) {
              g.as_fun();
              return Value::fun(
                  [f, g](const Value& x) { return apply(f, apply(g, x)); },
                  CombMeta{sig, 2});
            },
            CombMeta{sig, 1});
      },
      CombMeta{sig, 0});
}

const std::map<std::string, ExternDef>& registry() {
  static const std::map<std::string, ExternDef> table = build();
  return table;
}

const Value& extern_value(const std::string& name) { return registry().at(name).value; }

}  // namespace kombi
