#include "freehopf/kernels.hpp"

#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace freehopf::kernels {

Matrix hankel_fill_serial(const std::function<Rational(const Word&)>& f,
                          const std::vector<Word>& rows, const std::vector<Word>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = f(conc(rows[i], cols[j]));
  return out;
}

Matrix hankel_fill_parallel(const std::function<Rational(const Word&)>& f,
                            const std::vector<Word>& rows, const std::vector<Word>& cols) {
  Matrix out(rows.size(), cols.size());
  const auto n_rows = static_cast<long long>(rows.size());
  const auto n_cols = static_cast<long long>(cols.size());
  const long long total = n_rows * n_cols;
  std::exception_ptr error;
  std::mutex error_mutex;

#pragma omp parallel for schedule(dynamic, 16)
  for (long long idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx / n_cols);
    const auto j = static_cast<std::size_t>(idx % n_cols);
    try {
      out(i, j) = f(conc(rows[i], cols[j]));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::optional<std::size_t> first_violation_serial(std::size_t count,
                                                  const std::function<bool(std::size_t)>& holds) {
  for (std::size_t i = 0; i < count; ++i)
    if (!holds(i)) return i;
  return std::nullopt;
}

std::optional<std::size_t> first_violation_parallel(std::size_t count,
                                                    const std::function<bool(std::size_t)>& holds) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t first = kNone;
  std::exception_ptr error;
  std::mutex mutex;
  const auto n = static_cast<long long>(count);

#pragma omp parallel for schedule(dynamic, 4)
  for (long long idx = 0; idx < n; ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    bool ok = true;
    try {
      ok = holds(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex);
      if (!error) error = std::current_exception();
    }
    if (!ok) {
      std::lock_guard<std::mutex> lock(mutex);
      if (i < first) first = i;
    }
  }
  if (error) std::rethrow_exception(error);
  if (first == kNone) return std::nullopt;
  return first;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace freehopf::kernels
