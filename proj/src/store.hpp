// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "syntax.hpp"

namespace kombi {

enum class StoreOp { Get, Set };

template <class V>
struct BasicStoreEvent {
  StoreOp kind;
  Tag tag;
  V value;
};

/// Tag-addressed mutable references with an append-only event trace.
/// Parameterised over the value type so every interpreter in the project
/// records effects the same way.
template <class V>
class BasicStore {
 public:
  using Event = BasicStoreEvent<V>;
  using Bindings = std::map<Tag, V>;

  BasicStore() = default;
  explicit BasicStore(Bindings initial)
      : initial_(initial), bindings_(std::move(initial)) {}

  /// Reads a binding and records the read. Unbound tags are an error.
  V get(const Tag& t) {
    auto it = bindings_.find(t);
    if (it == bindings_.end()) throw UnboundTagError(t.name);
    trace_.push_back(Event{StoreOp::Get, t, it->second});
    return it->second;
  }

  /// Writes (creating if needed) a binding and records the write.
  void set(const Tag& t, V v) {
    trace_.push_back(Event{StoreOp::Set, t, v});
    bindings_.insert_or_assign(t, std::move(v));
  }

  const Bindings& bindings() const { return bindings_; }
  const Bindings& initial() const { return initial_; }
  const std::vector<Event>& trace() const { return trace_; }

  /// Replays the trace over the initial bindings.
  Bindings replay() const {
    Bindings out = initial_;
    for (const auto& e : trace_)
      if (e.kind == StoreOp::Set) out.insert_or_assign(e.tag, e.value);
    return out;
  }

 private:
  Bindings initial_;
  Bindings bindings_;
  std::vector<Event> trace_;
};

template <class V>
BasicStore<V> fresh_store(typename BasicStore<V>::Bindings initial = {}) {
  return BasicStore<V>(std::move(initial));
}

template <class V>
V store_get(const Tag& t, BasicStore<V>& s) {
  return s.get(t);
}

template <class V>
BasicStore<V>& store_set(const Tag& t, V v, BasicStore<V>& s) {
  s.set(t, std::move(v));
  return s;
}

/// One line per event: `GET tag value` / `SET tag value`. `render` maps a
/// value to text.
template <class V, class Render>
std::vector<std::string> trace_lines(const BasicStore<V>& s, Render render) {
  std::vector<std::string> out;
  out.reserve(s.trace().size());
  for (const auto& e : s.trace())
    out.push_back((e.kind == StoreOp::Get ? "GET " : "SET ") + e.tag.name + " " +
                  render(e.value));
  return out;
}

template <class V, class Render>
std::string trace_log(const BasicStore<V>& s, Render render) {
  std::ostringstream out;
  for (const auto& line : trace_lines(s, render)) out << line << '\n';
  return out.str();
}

/// `tag=value` pairs sorted by tag.
template <class V, class Render>
std::map<std::string, std::string> render_bindings(const BasicStore<V>& s,
                                                   Render render) {
  std::map<std::string, std::string> out;
  for (const auto& [tag, value] : s.bindings()) out.emplace(tag.name, render(value));
  return out;
}

using Store = BasicStore<Value>;
using StoreEvent = BasicStoreEvent<Value>;
using StoreHandle = std::shared_ptr<Store>;

}  // namespace kombi
