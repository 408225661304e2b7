// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "bench.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace kombi {

namespace {

std::string replace_all(std::string s, const std::string& key, const std::string& value) {
  for (auto pos = s.find(key); pos != std::string::npos; pos = s.find(key, pos + value.size()))
    s.replace(pos, key.size(), value);
  return s;
}

std::string list_literal(const std::vector<std::int64_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

const char* kFibOmega = R"(((\f. (f f))
  (\f. \n. if (n <= 1)
           then 1
           else (((f f) (n - 2)) + ((f f) (n - 1))) fi)
 ) $N)";

const char* kFibImp = R"(fib := (\n. if n <= 1 then 1 else !fib (n - 2) + !fib (n - 1) fi);
!fib $N)";

const char* kAckOmega = R"(((\f. f f)
  (\a. \m. \n.
     if m = 0 then n + 1
     else if n = 0 then a a (m - 1) 1
     else a a (m - 1) (a a m (n - 1)) fi fi)) $M $N)";

const char* kAckImp = R"(ack := (\m. \n.
   if m = 0 then n + 1
   else if n = 0 then !ack (m - 1) 1
   else !ack (m - 1) (!ack m (n - 1)) fi fi);
!ack $M $N)";

const char* kSortOmega = R"((\ins.
   (\sort. sort sort $LIST)
   (\s. \l. if isnil l then nil else ins ins (head l) (s s (tail l)) fi))
 (\i. \x. \l.
    if isnil l then x :: nil
    else if x <= head l then x :: l
    else head l :: i i x (tail l) fi fi))";

const char* kSortImp = R"(ins := (\x. \l.
   if isnil l then x :: nil
   else if x <= head l then x :: l
   else head l :: !ins x (tail l) fi fi);
sort := (\l. if isnil l then nil else !ins (head l) (!sort (tail l)) fi);
!sort $LIST)";

// Counts placements of N queens; a partial solution is the list of columns
// of the queens placed so far, most recent first.
const char* kQueensImp = R"(safe := (\c. \d. \qs.
   if isnil qs then true
   else if c = head qs then false
   else if c - head qs = d then false
   else if head qs - c = d then false
   else !safe c (d + 1) (tail qs) fi fi fi fi);
loop := (\qs. \k. \c.
   if $N < c then 0
   else (if !safe c 1 qs then !count (c :: qs) (k + 1) else 0 fi) + !loop qs k (c + 1) fi);
count := (\qs. \k. if k = $N then 1 else !loop qs k 1 fi);
!count nil 0)";

}  // namespace

std::int64_t fib_oracle(int n) {
  std::int64_t a = 1, b = 1;  // f(0), f(1)
  for (int i = 2; i <= n; ++i) {
    std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return n <= 0 ? 1 : b;
}

std::int64_t ack_oracle(std::int64_t m, std::int64_t n) {
  // Explicit stack of pending m values.
  std::vector<std::int64_t> stack{m};
  while (!stack.empty()) {
    m = stack.back();
    stack.pop_back();
    if (m == 0) {
      n = n + 1;
    } else if (n == 0) {
      stack.push_back(m - 1);
      n = 1;
    } else {
      stack.push_back(m - 1);
      stack.push_back(m);
      n = n - 1;
    }
  }
  return n;
}

std::int64_t queens_oracle(int n) {
  std::int64_t count = 0;
  std::vector<int> cols;
  std::function<void()> place = [&] {
    if (static_cast<int>(cols.size()) == n) {
      ++count;
      return;
    }
    for (int c = 1; c <= n; ++c) {
      bool ok = true;
      int row = static_cast<int>(cols.size());
      for (int r = 0; r < row && ok; ++r)
        ok = cols[r] != c && std::abs(cols[r] - c) != row - r;
      if (!ok) continue;
      cols.push_back(c);
      place();
      cols.pop_back();
    }
  };
  place();
  return count;
}

std::vector<std::int64_t> sort_input(int k) {
  std::vector<std::int64_t> out;
  std::uint64_t x = 12345;
  for (int i = 0; i < k; ++i) {
    x = (x * 1103515245u + 12345u) % 2147483648u;
    out.push_back(static_cast<std::int64_t>(x % 1000));
  }
  return out;
}

std::vector<BenchProgram> corpus(const CorpusParams& p) {
  std::vector<BenchProgram> out;
  auto add = [&](std::string name, std::string params, std::string text,
                 std::function<Value()> oracle, bool imp) {
    std::string origin = name + "(" + params + ")";
    out.push_back(BenchProgram{std::move(name), std::move(params),
                               SourceProgram{std::move(text), origin}, std::move(oracle), imp});
  };

  std::string n = std::to_string(p.fib_n);
  auto fib = [k = p.fib_n] { return Value::integer(fib_oracle(k)); };
  add("fib-omega", n, replace_all(kFibOmega, "$N", n), fib, false);
  add("fib-imp", n, replace_all(kFibImp, "$N", n), fib, true);

  std::string am = std::to_string(p.ack_m), an = std::to_string(p.ack_n);
  auto ack = [m = p.ack_m, k = p.ack_n] { return Value::integer(ack_oracle(m, k)); };
  add("ack-omega", am + "," + an, replace_all(replace_all(kAckOmega, "$M", am), "$N", an), ack,
      false);
  add("ack-imp", am + "," + an, replace_all(replace_all(kAckImp, "$M", am), "$N", an), ack, true);

  std::vector<std::int64_t> input = sort_input(p.sort_k);
  std::string lit = list_literal(input);
  auto sorted = [input] {
    std::vector<std::int64_t> s = input;
    std::sort(s.begin(), s.end());
    std::vector<Value> vs;
    for (auto x : s) vs.push_back(Value::integer(x));
    return Value::from_vector(vs);
  };
  std::string k = std::to_string(p.sort_k);
  add("sort-omega", k, replace_all(kSortOmega, "$LIST", lit), sorted, false);
  add("sort-imp", k, replace_all(kSortImp, "$LIST", lit), sorted, true);

  std::string q = std::to_string(p.queens);
  add("queens-imp", q, replace_all(kQueensImp, "$N", q),
      [k = p.queens] { return Value::integer(queens_oracle(k)); }, true);
  return out;
}

BenchReport run_bench(const std::vector<BenchProgram>& programs,
                      const std::vector<Engine>& engines, int repetitions,
                      std::uint64_t step_budget) {
  BenchReport report;
  for (const auto& prog : programs) {
    Expr e = check_closed(parse(prog.source));
    Value expected = prog.oracle();
    std::string label = prog.name + "(" + prog.params + ")";
    std::map<Engine, std::size_t> apps;
    for (Engine eng : engines) {
      RunConfig cfg;
      cfg.engine = eng;
      cfg.step_budget = step_budget;
      cfg.initial_store = default_store(e);
      cfg.keep_trace = false;
      std::vector<double> tt, et;
      BenchRow row;
      row.program = label;
      row.engine = eng;
      for (int rep = 0; rep < std::max(1, repetitions); ++rep) {
        Outcome o = run_program(e, cfg);
        bool ok = (o.kind == Outcome::Ground) && value_ground_eq(o.value, expected);
        if (!ok)
          throw BenchFailure(label + " under " + engine_name(eng) + ": expected " +
                             to_string(expected) + ", got " +
                             (o.kind == Outcome::Ground || o.kind == Outcome::Function
                                  ? to_string(o.value)
                                  : std::string(kind_name(o.kind)) + " (" + o.message + ")"));
        row.result = to_string(o.value);
        row.correct = true;
        row.app_count = o.app_count;
        row.steps = o.steps;
        row.trace_digest = o.trace_digest;
        row.trace_size = o.trace_size;
        tt.push_back(o.transform_s);
        et.push_back(o.eval_s);
      }
      std::sort(tt.begin(), tt.end());
      std::sort(et.begin(), et.end());
      row.transform_s = tt[tt.size() / 2];
      row.eval_s = et[et.size() / 2];
      if (eng != Engine::Classical) apps[eng] = row.app_count;
      report.rows.push_back(row);
    }

    auto has = [&](Engine e) { return apps.count(e) > 0; };
    bool inverted = (has(Engine::FAB) && has(Engine::C1) && apps[Engine::FAB] < apps[Engine::C1]) ||
                    (has(Engine::C1) && has(Engine::C2) && apps[Engine::C1] < apps[Engine::C2]) ||
                    (has(Engine::FAB) && has(Engine::C2) && apps[Engine::FAB] < apps[Engine::C2]);
    if (inverted) report.size_inversions.push_back(label);

    if (prog.imperative) {
      std::size_t first = report.rows.size() - engines.size();
      for (std::size_t i = first + 1; i < report.rows.size(); ++i)
        if (report.rows[i].trace_digest != report.rows[first].trace_digest ||
            report.rows[i].trace_size != report.rows[first].trace_size) {
          report.trace_mismatches.push_back(label);
          break;
        }
    }
  }
  return report;
}

std::string format_table(const BenchReport& r) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %-9s %10s %12s %10s %10s %8s\n", "program", "algo",
                "apps", "steps", "transf_s", "eval_s", "speedup");
  out << line;
  std::map<std::string, double> baseline;
  for (const auto& row : r.rows)
    if (row.engine == Engine::Classical) baseline[row.program] = row.eval_s;
  for (const auto& row : r.rows) {
    std::string speed = "-";
    auto it = baseline.find(row.program);
    if (it != baseline.end() && row.eval_s > 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2fx", it->second / row.eval_s);
      speed = buf;
    }
    std::string apps = row.engine == Engine::Classical ? "-" : std::to_string(row.app_count);
    std::snprintf(line, sizeof line, "%-18s %-9s %10s %12llu %10.4f %10.4f %8s\n",
                  row.program.c_str(), engine_name(row.engine), apps.c_str(),
                  static_cast<unsigned long long>(row.steps), row.transform_s, row.eval_s,
                  speed.c_str());
    out << line;
  }
  for (const auto& p : r.size_inversions)
    out << "note: application counts not ordered fab >= c1 >= c2 for " << p << '\n';
  for (const auto& p : r.trace_mismatches) out << "WARNING: store traces differ for " << p << '\n';
  return out.str();
}

std::string format_records(const BenchReport& r) {
  std::ostringstream out;
  for (const auto& row : r.rows) {
    char buf[64];
    std::string program = row.program;
    if (program.find(',') != std::string::npos) program = '"' + program + '"';
    out << program << ',' << engine_name(row.engine) << ',' << (row.correct ? 1 : 0) << ','
        << row.app_count << ',' << row.steps << ',';
    std::snprintf(buf, sizeof buf, "%.6f,%.6f", row.transform_s, row.eval_s);
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace kombi
