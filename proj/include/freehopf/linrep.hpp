#pragma once

#include <cstddef>
#include <map>

#include "freehopf/alphabet.hpp"
#include "freehopf/matrix.hpp"

namespace freehopf {

/// Linear representation (λ, μ, γ) of dimension n recognizing the series
/// f(w) = λ·μ(a₁)···μ(a_k)·γ, with f(1) = λ·γ.
class LinRep {
 public:
  /// Throws DomainError unless λ is 1×n, γ is n×1 and every letter has an
  /// n×n matrix.
  LinRep(Alphabet alphabet, Matrix lambda, std::map<char, Matrix> mu, Matrix gamma);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t dim() const noexcept { return lambda_.cols(); }
  const Matrix& lambda() const noexcept { return lambda_; }
  const Matrix& gamma() const noexcept { return gamma_; }
  const Matrix& mu(char symbol) const { return mu_.at(symbol); }
  const std::map<char, Matrix>& mu() const noexcept { return mu_; }

  /// μ(w), the identity for the empty word.
  Matrix mu(const Word& w) const;

  friend bool operator==(const LinRep&, const LinRep&) = default;

 private:
  Alphabet alphabet_;
  Matrix lambda_;
  std::map<char, Matrix> mu_;
  Matrix gamma_;
};

/// λμ(w)γ. Throws DomainError on alphabet mismatch.
Rational behavior(const LinRep& rep, const Word& w);

}  // namespace freehopf
