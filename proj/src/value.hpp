// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kombi {

class Value;

/// Static description of a curried native function: its name, how many
/// arguments it takes before doing any work, and whether a partial
/// application may be reduced ahead of evaluation time.
///
/// `pure` holds only for functions that apply nothing, raise nothing and
/// touch no store before they have received all their arguments.
struct CombSig {
  std::string id;
  int total_arity = 1;
  bool pure = false;
};

/// Metadata attached to a native function value. `args_seen` counts the
/// arguments already absorbed by the curried chain.
struct CombMeta {
  std::shared_ptr<const CombSig> sig;
  int args_seen = 0;

  const std::string& comb_id() const { return sig->id; }
  int total_arity() const { return sig->total_arity; }
  bool pure() const { return sig->pure; }
};

class Function;
struct CurriedState;
using FunPtr = std::shared_ptr<const Function>;

struct ConsCell;
using ListPtr = std::shared_ptr<const ConsCell>;

struct Dummy {
  bool operator==(const Dummy&) const = default;
};

/// Persistent singly linked list; a null pointer is the empty list.
struct List {
  ListPtr cells;
  bool empty() const { return cells == nullptr; }
};

class Value {
 public:
  using Rep = std::variant<std::int64_t, bool, List, Dummy, FunPtr>;

  Value() : rep_(Dummy{}) {}
  static Value integer(std::int64_t n) { return Value(Rep(n)); }
  static Value boolean(bool b) { return Value(Rep(b)); }
  static Value dummy() { return Value(Rep(Dummy{})); }
  static Value nil() { return Value(Rep(List{})); }
  static Value list(ListPtr cells) { return Value(Rep(List{std::move(cells)})); }
  static Value fun(FunPtr f) { return Value(Rep(std::move(f))); }
  static Value fun(std::function<Value(const Value&)> impl,
                   std::optional<CombMeta> meta = std::nullopt);
  static Value from_vector(const std::vector<Value>& items);

  bool is_int() const { return std::holds_alternative<std::int64_t>(rep_); }
  bool is_bool() const { return std::holds_alternative<bool>(rep_); }
  bool is_list() const { return std::holds_alternative<List>(rep_); }
  bool is_dummy() const { return std::holds_alternative<Dummy>(rep_); }
  bool is_fun() const { return std::holds_alternative<FunPtr>(rep_); }

  // Accessors throw TypeError on a variant mismatch.
  std::int64_t as_int() const;
  bool as_bool() const;
  const List& as_list() const;
  const FunPtr& as_fun() const;

  /// Metadata of a function value; empty for non-functions.
  std::optional<CombMeta> meta() const;

  const Rep& rep() const { return rep_; }

 private:
  explicit Value(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

struct CurriedState;

/// An opaque unary native callable.
class Function {
 public:
  using Impl = std::function<Value(const Value&)>;
  struct PartialTag {};

  explicit Function(Impl impl, std::optional<CombMeta> meta = std::nullopt)
      : impl_(std::move(impl)), meta_(std::move(meta)) {}
  // A curried native with no arguments yet.
  Function(PartialTag, std::shared_ptr<const CurriedState> state);
  // One more argument on top of the partial application `parent`.
  Function(PartialTag, FunPtr parent, Value arg, int args_seen);

  /// Applies `self` to `arg` without budget accounting; see apply().
  static Value call(const FunPtr& self, const Value& arg);
  std::optional<CombMeta> meta() const;

 private:
  const CurriedState& state() const;

  Impl impl_;
  std::optional<CombMeta> meta_;
  // Curried natives: the state lives at the root of the parent chain.
  std::shared_ptr<const CurriedState> state_;
  FunPtr parent_;
  Value arg_;
  int args_seen_ = -1;
};

struct ConsCell {
  Value head;
  ListPtr tail;
};

Value cons(Value head, const Value& tail);
std::vector<Value> list_items(const Value& list);

/// Ground values are integers, booleans, the dummy and lists of ground values.
bool is_ground(const Value& v);

/// Structural equality on ground values, reference identity on functions,
/// false otherwise.
bool value_ground_eq(const Value& a, const Value& b);

/// Canonical text: `42`, `true`, `[1, 2]`, `()`, `<fun>`.
std::string to_string(const Value& v);

// ---------------------------------------------------------------------------
// Native application and execution limits.

struct ExecLimits {
  std::uint64_t step_budget = UINT64_MAX;
  std::size_t stack_bytes = std::size_t{256} << 20;
};

/// Installs per-thread application counting and stack guarding for the
/// dynamic extent of an evaluation. Scopes nest; the innermost wins.
class ExecScope {
 public:
  explicit ExecScope(ExecLimits limits);
  ~ExecScope();
  ExecScope(const ExecScope&) = delete;
  ExecScope& operator=(const ExecScope&) = delete;

  std::uint64_t steps() const { return steps_; }

  // Called by evaluators on every reduction they perform.
  static void tick();

 private:
  ExecLimits limits_;
  std::uint64_t steps_ = 0;
  const char* stack_base_;
  ExecScope* previous_;
};

/// Applies a function value to an argument. Every native application in
/// the project goes through here so that budgets apply uniformly.
Value apply(const Value& f, const Value& arg);

/// Builds a curried native function of `sig->total_arity` arguments. Partial
/// applications are plain function values carrying advanced metadata; the
/// body runs once the last argument arrives.
class CurriedArgs {
 public:
  CurriedArgs(const Value* const* items, std::size_t n) : items_(items), n_(n) {}
  const Value& operator[](std::size_t i) const { return *items_[i]; }
  std::size_t size() const { return n_; }

 private:
  const Value* const* items_;
  std::size_t n_;
};
using CurriedBody = std::function<Value(CurriedArgs)>;
Value make_curried(std::shared_ptr<const CombSig> sig, CurriedBody body);

}  // namespace kombi
