// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "value.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace kombi {

namespace {

thread_local ExecScope* current_scope = nullptr;

const char* kind_name(const Value& v) {
  switch (v.rep().index()) {
    case 0: return "int";
    case 1: return "bool";
    case 2: return "list";
    case 3: return "dummy";
    default: return "function";
  }
}

[[noreturn]] void mismatch(const char* wanted, const Value& got) {
  throw TypeError(std::string("expected ") + wanted + ", got " + kind_name(got));
}

}  // namespace

struct CurriedState {
  std::shared_ptr<const CombSig> sig;
  CurriedBody body;
};

Value Value::fun(Function::Impl impl, std::optional<CombMeta> meta) {
  return fun(std::make_shared<const Function>(std::move(impl), std::move(meta)));
}

const CurriedState& Function::state() const {
  const Function* f = this;
  while (f->parent_) f = f->parent_.get();
  return *f->state_;
}

std::optional<CombMeta> Function::meta() const {
  if (args_seen_ < 0) return meta_;
  return CombMeta{state().sig, args_seen_};
}

Value Function::call(const FunPtr& self, const Value& arg) {
  const Function& f = *self;
  if (f.args_seen_ < 0) return f.impl_(arg);
  int seen = f.args_seen_ + 1;
  std::array<const Value*, 8> args;
  args[seen - 1] = &arg;
  int i = seen - 2;
  const Function* p = &f;
  for (; p->parent_; p = p->parent_.get()) args[i--] = &p->arg_;
  const CurriedState& st = *p->state_;
  if (seen < st.sig->total_arity)
    return Value::fun(std::make_shared<const Function>(PartialTag{}, self, arg, seen));
  return st.body(CurriedArgs(args.data(), seen));
}

Value Value::from_vector(const std::vector<Value>& items) {
  ListPtr cells;
  for (auto it = items.rbegin(); it != items.rend(); ++it)
    cells = std::make_shared<const ConsCell>(ConsCell{*it, std::move(cells)});
  return list(std::move(cells));
}

std::int64_t Value::as_int() const {
  if (auto* p = std::get_if<std::int64_t>(&rep_)) return *p;
  mismatch("int", *this);
}

bool Value::as_bool() const {
  if (auto* p = std::get_if<bool>(&rep_)) return *p;
  mismatch("bool", *this);
}

const List& Value::as_list() const {
  if (auto* p = std::get_if<List>(&rep_)) return *p;
  mismatch("list", *this);
}

const FunPtr& Value::as_fun() const {
  if (auto* p = std::get_if<FunPtr>(&rep_)) return *p;
  mismatch("function", *this);
}

std::optional<CombMeta> Value::meta() const {
  if (auto* p = std::get_if<FunPtr>(&rep_)) return (*p)->meta();
  return std::nullopt;
}

Value cons(Value head, const Value& tail) {
  const List& rest = tail.as_list();
  return Value::list(
      std::make_shared<const ConsCell>(ConsCell{std::move(head), rest.cells}));
}

std::vector<Value> list_items(const Value& list) {
  std::vector<Value> out;
  for (const ConsCell* c = list.as_list().cells.get(); c; c = c->tail.get())
    out.push_back(c->head);
  return out;
}

bool is_ground(const Value& v) {
  if (v.is_fun()) return false;
  if (!v.is_list()) return true;
  for (const ConsCell* c = v.as_list().cells.get(); c; c = c->tail.get())
    if (!is_ground(c->head)) return false;
  return true;
}

bool value_ground_eq(const Value& a, const Value& b) {
  if (a.rep().index() != b.rep().index()) return false;
  if (a.is_fun()) return a.as_fun() == b.as_fun();
  if (!is_ground(a) || !is_ground(b)) return false;
  if (a.is_int()) return a.as_int() == b.as_int();
  if (a.is_bool()) return a.as_bool() == b.as_bool();
  if (a.is_dummy()) return true;
  const ConsCell* x = a.as_list().cells.get();
  const ConsCell* y = b.as_list().cells.get();
  for (; x && y; x = x->tail.get(), y = y->tail.get())
    if (!value_ground_eq(x->head, y->head)) return false;
  return x == nullptr && y == nullptr;
}

std::string to_string(const Value& v) {
  if (v.is_int()) return std::to_string(v.as_int());
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  if (v.is_dummy()) return "()";
  if (v.is_fun()) return "<fun>";
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const ConsCell* c = v.as_list().cells.get(); c; c = c->tail.get()) {
    if (!first) out << ", ";
    first = false;
    out << to_string(c->head);
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------

ExecScope::ExecScope(ExecLimits limits)
    : limits_(limits),
      stack_base_(static_cast<const char*>(__builtin_frame_address(0))),
      previous_(current_scope) {
  current_scope = this;
}

ExecScope::~ExecScope() { current_scope = previous_; }

void ExecScope::tick() {
  ExecScope* s = current_scope;
  if (!s) return;
  if (++s->steps_ > s->limits_.step_budget)
    throw StepLimitExceeded("step budget of " +
                            std::to_string(s->limits_.step_budget) +
                            " reductions exhausted");
  const char* here = static_cast<const char*>(__builtin_frame_address(0));
  if (s->stack_base_ > here &&
      static_cast<std::size_t>(s->stack_base_ - here) > s->limits_.stack_bytes)
    throw StepLimitExceeded("native stack budget exhausted");
}

Value apply(const Value& f, const Value& arg) {
  const auto* fn = std::get_if<FunPtr>(&f.rep());
  if (!fn) mismatch("function in operator position", f);
  ExecScope::tick();
  return Function::call(*fn, arg);
}

Function::Function(PartialTag, std::shared_ptr<const CurriedState> state)
    : state_(std::move(state)), args_seen_(0) {}

Function::Function(PartialTag, FunPtr parent, Value arg, int args_seen)
    : parent_(std::move(parent)), arg_(std::move(arg)), args_seen_(args_seen) {}

Value make_curried(std::shared_ptr<const CombSig> sig, CurriedBody body) {
  if (sig->total_arity < 1 || sig->total_arity > 8)
    throw std::invalid_argument("curried arity out of range: " + sig->id);
  auto state = std::make_shared<const CurriedState>(
      CurriedState{std::move(sig), std::move(body)});
  return Value::fun(std::make_shared<const Function>(Function::PartialTag{}, std::move(state)));
}

}  // namespace kombi
