// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "stack.hpp"

#include <pthread.h>

#include <cstring>
#include <stdexcept>
#include <string>

namespace kombi::detail {

namespace {

thread_local bool large_stack = false;

struct Job {
  const std::function<void()>* fn;
};

void* trampoline(void* arg) {
  large_stack = true;
  (*static_cast<Job*>(arg)->fn)();
  return nullptr;
}

}  // namespace

bool on_large_stack() { return large_stack; }

void run_on_large_stack(const std::function<void()>& fn) {
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  if (int rc = pthread_attr_setstacksize(&attr, kLargeStackBytes); rc != 0) {
    pthread_attr_destroy(&attr);
    throw std::runtime_error(std::string("pthread_attr_setstacksize: ") +
                             std::strerror(rc));
  }
  Job job{&fn};
  pthread_t thread;
  int rc = pthread_create(&thread, &attr, trampoline, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0)
    throw std::runtime_error(std::string("pthread_create: ") + std::strerror(rc));
  pthread_join(thread, nullptr);
}

}  // namespace kombi::detail
