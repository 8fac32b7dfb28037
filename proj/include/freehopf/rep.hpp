#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "freehopf/alphabet.hpp"
#include "freehopf/combination.hpp"
#include "freehopf/matrix.hpp"

namespace freehopf {

/// A representation ρ: k⟨Σ⟩ → End(kⁿ), given by one n×n matrix per letter
/// and extended as the unique algebra morphism (ρ(1) = Id).
class MatRep {
 public:
  /// Throws DomainError unless every letter has exactly one dim×dim matrix.
  MatRep(Alphabet alphabet, std::size_t dim, std::map<char, Matrix> assign);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& operator[](char symbol) const { return assign_.at(symbol); }
  const std::map<char, Matrix>& assignment() const noexcept { return assign_; }

  friend bool operator==(const MatRep&, const MatRep&) = default;

 private:
  Alphabet alphabet_;
  std::size_t dim_;
  std::map<char, Matrix> assign_;
};

/// ψ ∈ V^∨ written as a row of coordinates.
class DualVector {
 public:
  explicit DualVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  Matrix as_row() const;

  friend bool operator==(const DualVector&, const DualVector&) = default;

 private:
  std::vector<Rational> coords_;
};

Matrix eval_rep(const MatRep& r, const Word& w);
/// ρ(P) = Σ α_w ρ(w). Throws DomainError on alphabet mismatch.
Matrix eval_rep(const MatRep& r, const NCPoly& p);

/// Per letter: diag(ρ₁(x), ρ₂(x)).
MatRep direct_sum(const MatRep& r1, const MatRep& r2);

/// Per letter: ρ₁(x)⊗ρ₂(x) for group-like x, ρ₁(x)⊗I + I⊗ρ₂(x) for primitive x.
MatRep tensor_rep(const MatRep& r1, const MatRep& r2);

/// The one-dimensional representation ε: [1] on group-like, [0] on primitive letters.
MatRep trivial_rep(const Alphabet& alphabet);

/// g ∗_S ψ = ψ ∘ ρ(S(g)). Throws DomainError when the alphabet has group-like
/// letters or ψ has the wrong length.
DualVector dual_action(const MatRep& r, const NCPoly& g, const DualVector& psi);

/// (Σ ⟨g₍₁₎ ∗_S ψ, g₍₂₎·x⟩, ε(g)·⟨ψ, x⟩). The two components agree whenever
/// S is an antipode; x is a dim×1 column.
std::pair<Rational, Rational> pairing_invariance_check(const MatRep& r, const NCPoly& g,
                                                       const DualVector& psi, const Matrix& x);

}  // namespace freehopf
