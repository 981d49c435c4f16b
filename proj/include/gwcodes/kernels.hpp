// Copyright 2026 The gwcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Index-space kernels used by every exhaustive routine. Each kernel has a
// serial reference and an OpenMP version with identical results: outputs are
// sorted or reduced with order-independent operators, so the schedule never
// shows through.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gw::kernels {

/// Caps the thread count used by parallel kernels; 0 restores the OpenMP default.
void set_max_threads(int n);
int max_threads();

/// Index ranges smaller than this run serially even through the dispatching
/// entry points.
inline constexpr std::uint64_t kParallelThreshold = 512;

namespace detail {

class ExceptionSlot {
 public:
  void capture() {
    std::lock_guard lock(mutex_);
    if (!error_) error_ = std::current_exception();
  }
  bool failed() const {
    std::lock_guard lock(mutex_);
    return error_ != nullptr;
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  mutable std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace detail

template <class Pred>
std::vector<std::uint64_t> filter_serial(std::uint64_t count, Pred&& pred) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < count; ++i)
    if (pred(i)) out.push_back(i);
  return out;
}

template <class Pred>
std::vector<std::uint64_t> filter_parallel(std::uint64_t count, Pred&& pred) {
  std::vector<std::uint64_t> out;
  detail::ExceptionSlot slot;
  std::mutex merge;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      if (slot.failed()) continue;
      try {
        if (pred(static_cast<std::uint64_t>(i))) local.push_back(static_cast<std::uint64_t>(i));
      } catch (...) {
        slot.capture();
      }
    }
    std::lock_guard lock(merge);
    out.insert(out.end(), local.begin(), local.end());
  }
  slot.rethrow();
  std::sort(out.begin(), out.end());
  return out;
}

template <class Pred>
std::vector<std::uint64_t> filter(std::uint64_t count, Pred&& pred) {
  if (count < kParallelThreshold || max_threads() <= 1) return filter_serial(count, pred);
  return filter_parallel(count, pred);
}

/// Maximum of fn(i) over [0, count), or `init` if the range is empty.
template <class Fn>
std::int64_t max_serial(std::uint64_t count, Fn&& fn, std::int64_t init) {
  std::int64_t best = init;
  for (std::uint64_t i = 0; i < count; ++i) best = std::max<std::int64_t>(best, fn(i));
  return best;
}

template <class Fn>
std::int64_t max_parallel(std::uint64_t count, Fn&& fn, std::int64_t init) {
  std::int64_t best = init;
  detail::ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 64) reduction(max : best)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    if (slot.failed()) continue;
    try {
      best = std::max<std::int64_t>(best, fn(static_cast<std::uint64_t>(i)));
    } catch (...) {
      slot.capture();
    }
  }
  slot.rethrow();
  return best;
}

template <class Fn>
std::int64_t max(std::uint64_t count, Fn&& fn, std::int64_t init) {
  if (count < kParallelThreshold || max_threads() <= 1) return max_serial(count, fn, init);
  return max_parallel(count, fn, init);
}

template <class Fn>
std::int64_t min_serial(std::uint64_t count, Fn&& fn, std::int64_t init) {
  return -max_serial(count, [&](std::uint64_t i) { return -static_cast<std::int64_t>(fn(i)); }, -init);
}

template <class Fn>
std::int64_t min_parallel(std::uint64_t count, Fn&& fn, std::int64_t init) {
  return -max_parallel(count, [&](std::uint64_t i) { return -static_cast<std::int64_t>(fn(i)); }, -init);
}

template <class Fn>
std::int64_t min(std::uint64_t count, Fn&& fn, std::int64_t init) {
  if (count < kParallelThreshold || max_threads() <= 1) return min_serial(count, fn, init);
  return min_parallel(count, fn, init);
}

/// Smallest index whose predicate fails, if any.
template <class Pred>
std::optional<std::uint64_t> first_violation_serial(std::uint64_t count, Pred&& holds) {
  for (std::uint64_t i = 0; i < count; ++i)
    if (!holds(i)) return i;
  return std::nullopt;
}

template <class Pred>
std::optional<std::uint64_t> first_violation_parallel(std::uint64_t count, Pred&& holds) {
  const auto failing = filter_parallel(count, [&](std::uint64_t i) { return !holds(i); });
  if (failing.empty()) return std::nullopt;
  return failing.front();
}

template <class Pred>
std::optional<std::uint64_t> first_violation(std::uint64_t count, Pred&& holds) {
  if (count < kParallelThreshold || max_threads() <= 1) return first_violation_serial(count, holds);
  return first_violation_parallel(count, holds);
}

/// out[i] = fn(i) for every index; results land at fixed slots, so the
/// parallel version is schedule-independent by construction.
template <class T, class Fn>
std::vector<T> map_serial(std::uint64_t count, Fn&& fn) {
  std::vector<T> out(count);
  for (std::uint64_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

template <class T, class Fn>
std::vector<T> map_parallel(std::uint64_t count, Fn&& fn) {
  std::vector<T> out(count);
  detail::ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    if (slot.failed()) continue;
    try {
      out[i] = fn(static_cast<std::uint64_t>(i));
    } catch (...) {
      slot.capture();
    }
  }
  slot.rethrow();
  return out;
}

template <class T, class Fn>
std::vector<T> map(std::uint64_t count, Fn&& fn) {
  if (count < kParallelThreshold || max_threads() <= 1) return map_serial<T>(count, fn);
  return map_parallel<T>(count, fn);
}

}  // namespace gw::kernels
