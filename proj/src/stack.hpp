// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>

namespace kombi {

/// Stack reserved for evaluation threads. Combinator-compiled recursion is
/// carried entirely by native frames, so evaluation needs far more than the
/// default 8 MiB.
inline constexpr std::size_t kLargeStackBytes = std::size_t{1} << 30;

/// Usable portion of a large stack handed to ExecLimits::stack_bytes.
inline constexpr std::size_t kLargeStackBudget = std::size_t{768} << 20;

namespace detail {
void run_on_large_stack(const std::function<void()>& fn);
bool on_large_stack();
}  // namespace detail

/// Runs `fn` on a thread with a kLargeStackBytes stack, or inline when the
/// caller already is one. Exceptions propagate to the caller.
template <class F>
auto with_large_stack(F&& fn) -> std::invoke_result_t<F&> {
  using R = std::invoke_result_t<F&>;
  if (detail::on_large_stack()) return fn();
  std::exception_ptr failure;
  if constexpr (std::is_void_v<R>) {
    detail::run_on_large_stack([&] {
      try {
        fn();
      } catch (...) {
        failure = std::current_exception();
      }
    });
    if (failure) std::rethrow_exception(failure);
  } else {
    std::optional<R> result;
    detail::run_on_large_stack([&] {
      try {
        result.emplace(fn());
      } catch (...) {
        failure = std::current_exception();
      }
    });
    if (failure) std::rethrow_exception(failure);
    return std::move(*result);
  }
}

}  // namespace kombi
