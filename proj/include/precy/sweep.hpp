#pragma once

// Exhaustive tuple-space sweeps. Every identity checker in the toolkit is a
// loop over a row-major index space that evaluates a residual per tuple; the
// serial and OpenMP kernels below produce identical reports.

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "precy/check_report.hpp"

namespace precy {

struct SweepOptions {
  int jobs = 1;
  std::size_t max_witnesses = 16;
};

/// Decodes a row-major index into `out.size()` digits of the given radix,
/// most significant digit first.
inline void decode_tuple(std::uint64_t idx, int radix, std::span<int> out) {
  for (std::size_t pos = out.size(); pos-- > 0;) {
    out[pos] = static_cast<int>(idx % static_cast<std::uint64_t>(radix));
    idx /= static_cast<std::uint64_t>(radix);
  }
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

namespace serial {

/// Reference kernel: plain ordered loop.
template <class Eval>
CheckReport sweep(std::string identity, std::uint64_t count, std::size_t max_witnesses, Eval&& eval) {
  CheckReport report;
  report.identity = std::move(identity);
  report.evaluated = count;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::optional<Witness> w = eval(idx);
    if (!w) continue;
    ++report.failures;
    if (report.witnesses.size() < max_witnesses) report.witnesses.push_back(std::move(*w));
  }
  report.pass = report.failures == 0;
  return report;
}

}  // namespace serial

namespace parallel {

/// OpenMP kernel. Each thread walks one contiguous block in order and keeps
/// its first `max_witnesses` failures; the global first failures are among
/// those, so the merged report equals the serial one.
template <class Eval>
CheckReport sweep(std::string identity, std::uint64_t count, std::size_t max_witnesses, int jobs,
                  Eval&& eval) {
#ifdef _OPENMP
  if (jobs < 1) jobs = omp_get_max_threads();
  struct Block {
    std::uint64_t failures = 0;
    std::vector<std::pair<std::uint64_t, Witness>> kept;
    std::exception_ptr error;
  };
  std::vector<Block> blocks(static_cast<std::size_t>(jobs));
#pragma omp parallel num_threads(jobs)
  {
    const auto tid = static_cast<std::uint64_t>(omp_get_thread_num());
    const auto nth = static_cast<std::uint64_t>(omp_get_num_threads());
    const std::uint64_t lo = count * tid / nth;
    const std::uint64_t hi = count * (tid + 1) / nth;
    Block& b = blocks[tid];
    try {
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::optional<Witness> w = eval(idx);
        if (!w) continue;
        ++b.failures;
        if (b.kept.size() < max_witnesses) b.kept.emplace_back(idx, std::move(*w));
      }
    } catch (...) {
      b.error = std::current_exception();
    }
  }
  CheckReport report;
  report.identity = std::move(identity);
  report.evaluated = count;
  std::vector<std::pair<std::uint64_t, Witness>> merged;
  for (auto& b : blocks) {
    if (b.error) std::rethrow_exception(b.error);
    report.failures += b.failures;
    for (auto& kw : b.kept) merged.push_back(std::move(kw));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& kw : merged) {
    if (report.witnesses.size() >= max_witnesses) break;
    report.witnesses.push_back(std::move(kw.second));
  }
  report.pass = report.failures == 0;
  return report;
#else
  (void)jobs;
  return serial::sweep(std::move(identity), count, max_witnesses, std::forward<Eval>(eval));
#endif
}

}  // namespace parallel

/// Runs fn(idx) for every idx in [0, count); parallel when jobs != 1. fn
/// must only write state owned by its index.
template <class Fn>
void for_each_index(std::uint64_t count, int jobs, Fn&& fn) {
#ifdef _OPENMP
  if (jobs != 1) {
    if (jobs < 1) jobs = omp_get_max_threads();
    std::exception_ptr error;
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      try {
        fn(static_cast<std::uint64_t>(i));
      } catch (...) {
#pragma omp critical(precy_for_each_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  (void)jobs;
  for (std::uint64_t i = 0; i < count; ++i) fn(i);
}

/// Dispatches on `opts.jobs`: 1 runs the serial reference kernel.
template <class Eval>
CheckReport sweep(std::string identity, std::uint64_t count, const SweepOptions& opts, Eval&& eval) {
  if (opts.jobs == 1) {
    return serial::sweep(std::move(identity), count, opts.max_witnesses, std::forward<Eval>(eval));
  }
  return parallel::sweep(std::move(identity), count, opts.max_witnesses, opts.jobs,
                         std::forward<Eval>(eval));
}

}  // namespace precy
