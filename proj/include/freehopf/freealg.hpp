#pragma once

#include <utility>
#include <vector>

#include "freehopf/alphabet.hpp"
#include "freehopf/combination.hpp"
#include "freehopf/rational.hpp"

namespace freehopf {

// Bialgebra structure of k⟨Σ⟩ for Σ = G ⊔ L: concatenation product, the
// subword coproduct Δ(w) = Σ_{I+J=I_L} w[I_G∪I] ⊗ w[I_G∪J], the counit
// ε(w) = [w ∈ G*], and the antipode S(w) = (-1)^|w| reverse(w) when G = ∅.

/// Bilinear extension of conc. Throws DomainError on alphabet mismatch.
NCPoly poly_mul(const NCPoly& p, const NCPoly& q);

/// One (left, right) pair per splitting I ⊔ J = I_L, before collection.
/// Always 2^|I_L| entries.
std::vector<std::pair<Word, Word>> coproduct_splittings(const Word& w);

/// Δ(w) via the subword formula, with like terms collected.
Tensor2 coproduct_word(const Word& w);

/// Linear extension of coproduct_word.
Tensor2 coproduct(const NCPoly& p);

/// Δ(p) computed as the product Δ(a₁)···Δ(a_n) in A⊗A for each word.
/// Independent of the subword formula; used to cross-check it.
Tensor2 coproduct_multiplicative(const NCPoly& p);

/// ε extended multiplicatively on words and linearly on polynomials.
Rational counit(const NCPoly& p);
Rational counit(const Word& w);

/// S(a₁…a_n) = (-1)^n a_n…a₁. Throws DomainError when the alphabet has
/// group-like letters.
NCPoly antipode(const NCPoly& p);

/// Componentwise concatenation product on A⊗A.
Tensor2 tensor2_mul(const Tensor2& x, const Tensor2& y);

/// (Δ⊗Id)∘Δ
Tensor3 coassoc_lhs(const NCPoly& p);
/// (Id⊗Δ)∘Δ
Tensor3 coassoc_rhs(const NCPoly& p);

/// Σ x₍₁₎ ε(x₍₂₎)
NCPoly contract_counit_right(const Tensor2& t);
/// Σ ε(x₍₁₎) x₍₂₎
NCPoly contract_counit_left(const Tensor2& t);

/// Σ S(p₍₁₎) p₍₂₎ and Σ p₍₁₎ S(p₍₂₎); both equal ε(p)·1 when S is an antipode.
NCPoly antipode_left_sum(const NCPoly& p);
NCPoly antipode_right_sum(const NCPoly& p);

}  // namespace freehopf
