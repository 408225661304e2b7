// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "store.hpp"
#include "syntax.hpp"

namespace kombi {

// ---------------------------------------------------------------------------
// Terms of the call-by-value calculus with function constants. Values are
// variables, abstractions and constants; only applications reduce.

struct RTermNode;
using RTerm = Term<RTermNode>;
namespace rterm {
struct Var { Ident name; };
struct Abs { Ident param; RTerm body; };
struct App { RTerm fn; RTerm arg; };
/// A function constant, possibly partially applied to `args` (all values).
/// Integers and booleans are nullary constants carrying `payload`.
struct Const {
  std::string symbol;
  std::int64_t payload = 0;
  std::vector<RTerm> args;
};
}  // namespace rterm
struct RTermNode {
  std::variant<rterm::Var, rterm::Abs, rterm::App, rterm::Const> v;
};

namespace rt {
RTerm var(std::string name);
RTerm var(Ident name);
RTerm abs(std::string param, RTerm body);
RTerm abs(Ident param, RTerm body);
RTerm app(RTerm fn, RTerm arg);
RTerm app(RTerm fn, RTerm a, RTerm b);
RTerm app(RTerm fn, RTerm a, RTerm b, RTerm c);
RTerm sym(std::string symbol);
RTerm integer(std::int64_t n);
RTerm boolean(bool b);
RTerm dummy();
}  // namespace rt

bool is_value(const RTerm& m);
bool is_closed(const RTerm& m);
std::size_t term_size(const RTerm& m);
bool rterm_equal(const RTerm& a, const RTerm& b);
std::string to_string(const RTerm& m);

/// Ground constants print like runtime values (`3`, `true`, `()`); anything
/// else is `<fun>`. Used to compare results with native evaluation.
std::string observe(const RTerm& v);
bool is_ground(const RTerm& v);

using RStore = BasicStore<RTerm>;

/// Semantics of the function constants. `fn` receives all arguments and the
/// store; an empty result means the application is stuck.
struct DeltaEntry {
  int arity = 0;
  std::function<std::optional<RTerm>(const std::vector<RTerm>&, RStore&)> fn;
};
using DeltaTable = std::map<std::string, DeltaEntry>;

/// plus minus times leq lt eq, SEL (boolean selector of its second or third
/// argument), and get:<t> / set:<t> for each tag in `tags`.
DeltaTable default_delta(const std::vector<std::string>& tags = {});

/// Capture-avoiding substitution [v/x]m. Renamed binders take fresh reserved
/// names.
RTerm subst(const Ident& x, const RTerm& v, const RTerm& m);

enum class StepResult { Stepped, Value, Stuck };

/// One leftmost call-by-value step. On Stepped, `m` is replaced by the
/// reduct and `s` reflects any effect.
StepResult step(RTerm& m, RStore& s, const DeltaTable& delta);

struct RunOutcome {
  enum Kind { Value, Stuck, Timeout } kind;
  RTerm term;
  RStore store;
  std::uint64_t steps = 0;
};

/// Iterates step up to `budget` times. Terms growing beyond `max_size`
/// nodes also count as a timeout.
RunOutcome run(RTerm m, RStore s, const DeltaTable& delta, std::uint64_t budget,
               std::size_t max_size = 200000);

/// The combinators as λ-terms.
RTerm comb_I();
RTerm comb_K();
RTerm comb_S();

/// The formal elimination: 𝒞 removes every abstraction of the input, 𝒟(x,m)
/// abstracts x out of an abstraction-free m. Closed abstractions met by 𝒟
/// are combinators produced earlier and count as constants.
RTerm celim(const RTerm& m);
RTerm delim(const Ident& x, const RTerm& m);

struct Verdict {
  enum Kind { Agree, Disagree, Inconclusive } kind;
  std::string details;
};

/// Runs m and celim(m) from the same store and compares outcome class,
/// final store, effect trace and (by probing with ground arguments for
/// functions) the result.
Verdict check_theorem(const RTerm& m, const RStore& s, const DeltaTable& delta,
                      std::uint64_t budget);

}  // namespace kombi
