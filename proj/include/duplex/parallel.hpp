#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace duplex {

// Runs fn(i) for every i in [0, n) across `jobs` worker threads. Thread t
// handles the stripe i = t, t + jobs, ...; results must be written to
// per-index slots owned by the caller, which keeps the output independent of
// scheduling. The first exception thrown by any worker is rethrown on the
// calling thread after all workers join. jobs <= 1 degrades to a plain loop.
inline void parallel_for(std::size_t n, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (jobs > n) jobs = static_cast<unsigned>(n);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += jobs) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Worker count from the DUPLEX_TWIST_JOBS environment variable, or `fallback`
// when the variable is unset or not a positive integer.
inline unsigned jobs_from_env_or(unsigned fallback) {
  const char* env = std::getenv("DUPLEX_TWIST_JOBS");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  unsigned long value = std::strtoul(env, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0 || value > 1024)
    return fallback;
  return static_cast<unsigned>(value);
}

// Default worker count: hardware concurrency, overridable via the
// environment; never zero.
inline unsigned default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return jobs_from_env_or(hw);
}

}  // namespace duplex
