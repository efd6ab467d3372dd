#include "diracam/exec.hpp"

#include <omp.h>

namespace diracam {
namespace {

constexpr std::size_t kLeaf = 32;
// Below this length a subtree is summed inside one task.
constexpr std::size_t kTaskGrain = 8192;

double sum_tree(const double* p, std::size_t n) {
  if (n <= kLeaf) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += p[i];
    return s;
  }
  const std::size_t half = n / 2;
  return sum_tree(p, half) + sum_tree(p + half, n - half);
}

double sum_tree_tasks(const double* p, std::size_t n) {
  if (n <= kTaskGrain) return sum_tree(p, n);
  const std::size_t half = n / 2;
  double left = 0.0;
  double right = 0.0;
#pragma omp task shared(left) firstprivate(p, half)
  left = sum_tree_tasks(p, half);
  right = sum_tree_tasks(p + half, n - half);
#pragma omp taskwait
  return left + right;
}

}  // namespace

double pairwise_sum(std::span<const double> values, Exec exec) {
  if (exec == Exec::serial || values.size() <= kTaskGrain) return sum_tree(values.data(), values.size());
  double total = 0.0;
#pragma omp parallel
#pragma omp single
  total = sum_tree_tasks(values.data(), values.size());
  return total;
}

int parallel_workers() { return omp_get_max_threads(); }

}  // namespace diracam
