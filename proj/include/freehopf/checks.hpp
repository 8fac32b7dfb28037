#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "freehopf/alphabet.hpp"

namespace freehopf {

/// Outcome of an exhaustive property sweep.
struct CheckReport {
  std::string name;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

// Each check enumerates every case up to the given word length and runs the
// cases through kernels::first_violation_parallel; the counterexample is the
// first failing case in enumeration order.

/// (Δ⊗Id)∘Δ(w) = (Id⊗Δ)∘Δ(w) for |w| ≤ max_length.
CheckReport check_coassoc(const Alphabet& alphabet, std::size_t max_length);

/// Σ S(w₍₁₎)w₍₂₎ = Σ w₍₁₎S(w₍₂₎) = ε(w)·1 for |w| ≤ max_length.
/// Throws DomainError when the alphabet has group-like letters.
CheckReport check_antipode(const Alphabet& alphabet, std::size_t max_length);

/// Δ(uv) = Δ(u)·Δ(v) for |u|, |v| ≤ max_length.
CheckReport check_morphism(const Alphabet& alphabet, std::size_t max_length);

/// Δ computed by the subword formula equals Δ(a₁)···Δ(a_n), |w| ≤ max_length.
CheckReport check_coproduct_paths(const Alphabet& alphabet, std::size_t max_length);

/// Σ w₍₁₎ε(w₍₂₎) = Σ ε(w₍₁₎)w₍₂₎ = w for |w| ≤ max_length.
CheckReport check_counit(const Alphabet& alphabet, std::size_t max_length);

/// (χ_u ∗ χ_v) ∗ χ_w = χ_u ∗ (χ_v ∗ χ_w) for |u|, |v|, |w| ≤ 2, compared on
/// every target word of length ≤ max_length.
CheckReport check_dual_assoc(const Alphabet& alphabet, std::size_t max_length);

/// conv_rep against the subword-splitting sum on every target word of length
/// ≤ max_length, for all ordered pairs of the reference series
/// {geometric(2), geometric(3), counting(first letter), χ_w} where w is the
/// first two letters of the alphabet (or the single letter twice).
CheckReport check_conv_oracle(const Alphabet& alphabet, std::size_t max_length);

}  // namespace freehopf
