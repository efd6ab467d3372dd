#pragma once

#include <cstddef>
#include <span>

namespace diracam {

/// Loop driver for lattice kernels. `serial` is the reference path; the
/// OpenMP path must reproduce it bit for bit.
enum class Exec { serial, parallel };

/// Calls fn(site) for every site in [0, count). Per-site work must not
/// throw and must only write to storage owned by that site.
template <class Fn>
void for_each_site(std::size_t count, Exec exec, Fn&& fn) {
  if (exec == Exec::parallel) {
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) fn(i);
  }
}

/// Pairwise (tree) summation. The split points depend only on the length,
/// so the serial and task-parallel paths perform identical additions.
double pairwise_sum(std::span<const double> values, Exec exec = Exec::parallel);

/// Number of worker threads an Exec::parallel region would use.
int parallel_workers();

}  // namespace diracam
