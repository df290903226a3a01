#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tvindex/sweep.hpp"

namespace tvi {

namespace {

int default_threads() {
#ifdef _OPENMP
  static const int value = omp_get_max_threads();
  return value;
#else
  return 1;
#endif
}

// Evaluates f(b) for every b; slots are independent so no reduction is needed.
template <class F>
std::vector<Integer> map_parallel(std::span<const WeightVector> bs, F f) {
  std::vector<Integer> out(bs.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(bs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = f(bs[i]);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

void set_thread_limit(int threads) {
#ifdef _OPENMP
  omp_set_num_threads(threads > 0 ? threads : default_threads());
#else
  (void)threads;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

std::vector<Integer> index_values(const PreparedSetup& setup, std::span<const WeightVector> bs) {
  return map_parallel(bs, [&](const WeightVector& b) { return setup.index_value(b); });
}

std::vector<Integer> signature_sums(const PreparedSetup& setup, std::span<const WeightVector> bs) {
  return map_parallel(bs, [&](const WeightVector& b) { return setup.signature_sum_value(b); });
}

}  // namespace parallel

}  // namespace tvi
