#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "freehopf/alphabet.hpp"
#include "freehopf/matrix.hpp"

namespace freehopf::kernels {

// Data-parallel sweeps used by the Hankel builder and the exhaustive
// property checks. Each OpenMP kernel has a serial reference with identical
// results; the tests compare the two.

/// Entry (i, j) = f(rows[i]·cols[j]).
Matrix hankel_fill_serial(const std::function<Rational(const Word&)>& f,
                          const std::vector<Word>& rows, const std::vector<Word>& cols);
Matrix hankel_fill_parallel(const std::function<Rational(const Word&)>& f,
                            const std::vector<Word>& rows, const std::vector<Word>& cols);

/// Smallest index in [0, count) for which `holds` returns false, or nullopt.
std::optional<std::size_t> first_violation_serial(std::size_t count,
                                                  const std::function<bool(std::size_t)>& holds);

/// Same contract as the serial version. The lowest failing index is returned
/// even though iterations run out of order. The first exception thrown by
/// `holds` is rethrown on the calling thread.
std::optional<std::size_t> first_violation_parallel(std::size_t count,
                                                    const std::function<bool(std::size_t)>& holds);

/// Number of OpenMP threads a parallel region would use (1 without OpenMP).
int max_threads();

}  // namespace freehopf::kernels
