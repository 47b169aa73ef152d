#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace axcat {

// kSerial is the reference path the parallel kernels are tested against.
enum class Schedule : std::uint8_t { kSerial, kParallel };

int worker_count();

// out[i] = fn(i) for i in [0, n). Results are ordered by index no matter
// which worker produced them. If any call throws, the exception from the
// lowest index is rethrown after the loop.
template <class Fn>
auto parallel_generate(std::size_t n, Fn&& fn, Schedule schedule)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto body = [&](std::size_t i) {
    try {
      slots[i].emplace(fn(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (schedule == Schedule::kParallel) {
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

template <class T, class Fn>
auto parallel_map(std::span<const T> items, Fn&& fn, Schedule schedule) {
  return parallel_generate(
      items.size(), [&](std::size_t i) { return fn(items[i]); }, schedule);
}

// Number of items for which `holds` returns false or throws.
template <class T, class Pred>
std::size_t count_failures(std::span<const T> items, Pred&& holds, Schedule schedule) {
  const auto passes = [&](const T& item) {
    try {
      return static_cast<bool>(holds(item));
    } catch (...) {
      return false;
    }
  };
  const auto count = static_cast<std::ptrdiff_t>(items.size());
  std::size_t failures = 0;
  if (schedule == Schedule::kParallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      if (!passes(items[static_cast<std::size_t>(i)])) ++failures;
    }
  } else {
    for (const auto& item : items) {
      if (!passes(item)) ++failures;
    }
  }
  return failures;
}

}  // namespace axcat
