#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfelim {

// Kernels that map over the terms of a combination take an Exec argument.
// Exec::serial is the reference path used by tests; both paths produce
// identical results because coefficient arithmetic is exact.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Sums f(key, coeff) over all terms of x. `zero` supplies the additive
// identity (it may carry an alphabet).
template <class Comb, class Result, class F>
Result sum_over_terms(const Comb& x, F&& f, Result zero, Exec exec) {
  if (exec == Exec::serial || x.size() < 2) {
    Result acc = std::move(zero);
    for (const auto& [k, c] : x) acc += f(k, c);
    return acc;
  }

  std::vector<typename Comb::const_iterator> items;
  items.reserve(x.size());
  for (auto it = x.begin(); it != x.end(); ++it) items.push_back(it);

  const auto n = static_cast<std::ptrdiff_t>(items.size());
  std::vector<Result> partial(static_cast<std::size_t>(max_threads()), zero);
  std::exception_ptr error;
#pragma omp parallel
  {
#ifdef _OPENMP
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& local = partial[0];
#endif
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        const auto& [k, c] = *items[static_cast<std::size_t>(i)];
        local += f(k, c);
      } catch (...) {
#pragma omp critical(hopfelim_exec_error)
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  Result acc = std::move(zero);
  for (auto& p : partial) acc += p;
  return acc;
}

// Evaluates f(i) for i in [0, n) and returns the results in index order.
template <class F>
auto map_indices(std::size_t n, F&& f, Exec exec) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  const auto count = static_cast<std::ptrdiff_t>(n);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hopfelim_exec_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace hopfelim
