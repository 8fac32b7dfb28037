#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "freehopf/linrep.hpp"
#include "freehopf/series.hpp"

namespace freehopf {

// Sweedler's dual of k⟨Σ⟩: forms whose shifted families have finite rank,
// equivalently forms recognized by a finite linear representation (λ, μ, γ).

/// f_s(x) = f(sx). A LinRep (λ, μ, γ) becomes (λμ(s), μ, γ).
Series shift_right(const Series& f, const Word& s);
/// ₛf(x) = f(xs). A LinRep (λ, μ, γ) becomes (λ, μ, μ(s)γ).
Series shift_left(const Series& f, const Word& s);

/// Finite window of the Hankel matrix: entry(u, v) = f(uv) for prefixes
/// |u| ≤ p and suffixes |v| ≤ s, both in length-lex order.
struct HankelSlice {
  std::vector<Word> rows;
  std::vector<Word> cols;
  Matrix entries;
};

using CoeffOracle = std::function<Rational(const Word&)>;

HankelSlice hankel(const Series& f, std::size_t p, std::size_t s);
HankelSlice hankel(const Alphabet& alphabet, const CoeffOracle& f, std::size_t p, std::size_t s);

std::size_t hankel_rank(const Series& f, std::size_t p, std::size_t s);
std::size_t hankel_rank(const Alphabet& alphabet, const CoeffOracle& f, std::size_t p,
                        std::size_t s);

/// Minimal LinRep for f from the Hankel window of exploration length L.
///
/// The rank of the (L, L) window must equal that of the (L+1, L+1) window,
/// otherwise InconclusiveError is thrown. States are the length-lex-first
/// independent prefix rows; transitions come from exact solves over ℚ. The
/// result is checked against f on all words of length ≤ 2L+1 (mismatch is
/// also inconclusive). The zero series yields the dimension-1 zero LinRep.
LinRep learn(const Series& f, std::size_t explore);
LinRep learn(const Alphabet& alphabet, const CoeffOracle& f, std::size_t explore);

/// Δ_∗ f: pairs (g_i, h_i) with g_i(x) = λμ(x)e_i and h_i(y) = e_iᵀμ(y)γ,
/// so that f(xy) = Σ g_i(x) h_i(y).
std::vector<std::pair<Series, Series>> split(const LinRep& rep);

/// Representation of the convolution f₁ ∗ f₂: λ₁⊗λ₂, γ₁⊗γ₂, and per letter
/// μ₁⊗μ₂ (group-like) or μ₁⊗I + I⊗μ₂ (primitive).
LinRep conv_rep(const LinRep& r1, const LinRep& r2);

/// LinRep with one state per suffix of a support word (length-lex order);
/// recognizes exactly the given finitely supported series.
LinRep embed_finite(const NCPoly& support);
LinRep embed_finite(const Series& f);

/// Representation of w ↦ f(S(w)) = (-1)^|w| f(reverse w): (γᵀ, -μᵀ, λᵀ).
/// Throws DomainError when the alphabet has group-like letters.
LinRep transpose_antipode(const LinRep& rep);

/// δ₁(f) = f(1) = λγ.
Rational dual_counit(const LinRep& rep);

/// Recognizable series as a LinRep, embedding finite support if needed.
LinRep as_linrep(const Series& f);

}  // namespace freehopf
