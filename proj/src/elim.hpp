// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <vector>

#include "refsem.hpp"
#include "syntax.hpp"

namespace kombi {

/// Rule sets for variable elimination.
///
///   FAB  rules (f), (a_v), (b): S, K, I only, no pre-evaluation.
///   C1   adds B, C, N (call-by-value restricted) and S_IF, with automatic
///        pre-evaluation.
///   C2   adds the multi-abstraction/multi-application families
///        (S2, S^2, S2^2 with their selective variants), S_IF^2, K^2 and
///        the (i^2) rule.
enum class ElimAlgo { FAB, C1, C2 };

const char* algo_name(ElimAlgo algo);

struct CombinatorDef {
  std::string comb_id;
  int total_arity = 1;
  bool pure = true;
  Value value;
  RTerm defining_term;
  // Argument positions (0-based) passed along unapplied. Under call-by-value
  // only values may appear there.
  std::vector<int> constant_positions;
};

/// Every combinator any roster uses, by comb_id. Values are process-wide
/// singletons so they can be recognised by identity.
const CombinatorDef& combinator(const std::string& id);

/// The roster used by `algo`, in a stable order.
std::vector<CombinatorDef> make_combinators(ElimAlgo algo);

/// The combinator λb1..λbk.λx1..λxn.(b1' b2' ... bk') where bi' is
/// (bi x1 .. xn) if mask[i] and bi otherwise. For k=2, n=1 the masks
/// TT, FT, TF, FF give S, B, C, N.
const CombinatorDef& mask_combinator(const std::vector<bool>& mask, int n);

enum class HandMade { K_c, B_c, C_c, N_c };

/// Specialised combinators with their constant arguments built in:
/// K_c ≡ λx.c, B_c ≡ λg.λx.(c (g x)), C_c ≡ λf.λx.((f x) c),
/// N_c ≡ λx.(c1 c2). `consts` holds c, or c1 and c2 for N_c.
PExpr hand_combinator(HandMade kind, const std::vector<Value>& consts);

struct ElimOptions {
  ElimAlgo algo = ElimAlgo::C2;
  bool pre_eval = true;
  bool hand_made = false;

  /// Pre-evaluation on for C1 and C2, off for FAB.
  static ElimOptions defaults(ElimAlgo algo);
};

/// Removes every abstraction whose variable still occurs. Free variables
/// are left in place as leaves.
PExpr elim(const PExpr& e, const ElimOptions& opts);
PExpr elim(const PExpr& e, ElimAlgo algo);

/// Folds, bottom-up, applications of pure partial combinators to constants
/// whenever the result still misses at least one argument.
PExpr pre_eval_app(const PExpr& e);

/// Copies a variable-free term into the minimal language. Throws
/// UnexpectedError on a variable or abstraction.
MExpr check_no_var(const PExpr& e);

MExpr transform(const PExpr& e, const ElimOptions& opts);
MExpr transform(const PExpr& e, ElimAlgo algo);

/// Applications found in a constant position of a combinator (for example
/// the first argument of K or B). Under call-by-value such a term would be
/// evaluated too early, so a correct eliminator never produces one.
std::vector<std::string> cbv_violations(const MExpr& e);

}  // namespace kombi
