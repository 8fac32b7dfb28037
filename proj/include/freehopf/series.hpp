#pragma once

#include <cstddef>
#include <variant>

#include "freehopf/combination.hpp"
#include "freehopf/linrep.hpp"

namespace freehopf {

/// A linear form f on k⟨Σ⟩, identified with its coefficients f(w).
///
/// Only computable forms are representable: finitely supported ones (stored
/// as their support polynomial) and recognizable ones (stored as a LinRep).
class Series {
 public:
  explicit Series(NCPoly support) : alphabet_(support.alphabet()), body_(std::move(support)) {}
  explicit Series(LinRep rep) : alphabet_(rep.alphabet()), body_(std::move(rep)) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  bool finite_support() const noexcept { return std::holds_alternative<NCPoly>(body_); }
  bool recognizable() const noexcept { return std::holds_alternative<LinRep>(body_); }

  /// Throws DomainError when the series is not of the requested variant.
  const NCPoly& support() const;
  const LinRep& rep() const;

  /// f(w); zero off-support for finitely supported series.
  Rational coeff(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::variant<NCPoly, LinRep> body_;
};

/// χ_w, the indicator of a single word.
Series indicator(const Word& w);

/// ⟨f, P⟩ = Σ α_w f(w).
Rational pair(const Series& f, const NCPoly& p);

/// (f ∗ h)(w) = Σ_{I+J=I_L} f(w[I_G∪I]) h(w[I_G∪J]).
/// Finite × finite stays finite; otherwise both sides are embedded as
/// LinReps and combined with conv_rep.
Series convolve(const Series& f, const Series& h);

/// e_ε: the unit of ∗, equal to ε on words. Always recognizable, dimension 1.
Series dual_unit(const Alphabet& alphabet);

Series add(const Series& f, const Series& h);
Series scale(const Series& f, const Rational& factor);

/// Coefficientwise equality on all words of length ≤ max_length.
bool agree_up_to(const Series& f, const Series& h, std::size_t max_length);

/// Exact equality. Decided by checking that f − h, written as a LinRep,
/// vanishes on a basis of its reachable row space.
bool equivalent(const Series& f, const Series& h);

}  // namespace freehopf
