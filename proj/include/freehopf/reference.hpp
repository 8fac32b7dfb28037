#pragma once

#include "freehopf/linrep.hpp"

namespace freehopf {

// Small named series used by the check suites, the tests and the CLI.

/// f(w) = ratio^|w|: dimension 1, μ(x) = [ratio] for every letter.
LinRep geometric_rep(const Alphabet& alphabet, const Rational& ratio);

/// f(w) = number of occurrences of `counted` in w:
/// λ = [1 0], μ(counted) = [[1 1], [0 1]], μ(other) = I, γ = [0 1]ᵀ.
LinRep counting_rep(const Alphabet& alphabet, char counted);

}  // namespace freehopf
