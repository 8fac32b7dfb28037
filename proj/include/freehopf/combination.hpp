#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "freehopf/alphabet.hpp"
#include "freehopf/rational.hpp"

namespace freehopf {

/// Term order for Combination<N>.
///
/// Polynomials (N = 1) iterate length-then-lex ascending. Tensors compare
/// factor by factor, each factor degree-descending then lex, so Δ(ab) reads
/// ab⊗1 + a⊗b + b⊗a + 1⊗ab.
template <std::size_t N>
struct TermOrder {
  bool operator()(const std::array<std::string, N>& a,
                  const std::array<std::string, N>& b) const noexcept {
    if constexpr (N == 1) {
      return LengthLex{}(a[0], b[0]);
    } else {
      for (std::size_t i = 0; i < N; ++i) {
        if (a[i].size() != b[i].size()) return a[i].size() > b[i].size();
        if (a[i] != b[i]) return a[i] < b[i];
      }
      return false;
    }
  }
};

/// Finite ℚ-linear combination of N-tuples of words over one alphabet.
/// Zero coefficients are never stored.
template <std::size_t N>
class Combination {
 public:
  using Key = std::array<std::string, N>;
  using Map = std::map<Key, Rational, TermOrder<N>>;

  explicit Combination(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  /// coeff · (w₁ ⊗ … ⊗ w_N).
  static Combination monomial(const std::array<Word, N>& words, const Rational& coeff = 1) {
    Combination out(words[0].alphabet());
    Key key;
    for (std::size_t i = 0; i < N; ++i) {
      require_same_alphabet(out.alphabet_, words[i].alphabet(), "monomial");
      key[i] = words[i].symbols();
    }
    out.add(key, coeff);
    return out;
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds coeff·key in place. Keys are trusted to be over alphabet().
  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Combination& operator+=(const Combination& other) {
    require_same_alphabet(alphabet_, other.alphabet_, "add");
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    require_same_alphabet(alphabet_, other.alphabet_, "subtract");
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }

  Combination scaled(const Rational& factor) const {
    Combination out(alphabet_);
    if (factor == 0) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, c * factor);
    return out;
  }

  friend bool operator==(const Combination& a, const Combination& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

 private:
  Alphabet alphabet_;
  Map terms_;
};

using NCPoly = Combination<1>;
using Tensor2 = Combination<2>;
using Tensor3 = Combination<3>;

/// The polynomial coeff·w.
inline NCPoly poly_of(const Word& w, const Rational& coeff = 1) {
  return NCPoly::monomial({w}, coeff);
}
/// The unit polynomial 1 (empty word, coefficient 1).
inline NCPoly unit_poly(const Alphabet& alphabet) { return poly_of(Word(alphabet)); }

inline Rational coeff_of(const NCPoly& p, const Word& w) { return p.coeff({w.symbols()}); }

}  // namespace freehopf
