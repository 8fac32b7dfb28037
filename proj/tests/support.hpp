#pragma once

#include <random>
#include <string>
#include <vector>

#include "freehopf/alphabet.hpp"
#include "freehopf/combination.hpp"
#include "freehopf/matrix.hpp"
#include "freehopf/rep.hpp"
#include "freehopf/text.hpp"

namespace testing {

using namespace freehopf;

inline Alphabet alpha(const char* decl) { return Alphabet::parse(decl); }
inline Word word(const Alphabet& a, const std::string& s) { return Word(a, s == "1" ? "" : s); }
inline NCPoly poly(const Alphabet& a, const std::string& s) { return parse_poly(a, s); }

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long x : r) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return Matrix::from_rows(out);
}

inline Matrix column(std::initializer_list<long> xs) {
  Matrix out(xs.size(), 1);
  std::size_t i = 0;
  for (long x : xs) out(i++, 0) = x;
  return out;
}

/// Seeded generator for random words, polynomials and matrices.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational small_rational() {
    long num = integer(-4, 4);
    long den = integer(1, 3);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Word any_word(const Alphabet& a, std::size_t max_len) {
    std::size_t len = static_cast<std::size_t>(integer(0, static_cast<long>(max_len)));
    std::string s;
    for (std::size_t i = 0; i < len; ++i)
      s += a.letters()[static_cast<std::size_t>(integer(0, static_cast<long>(a.size()) - 1))].symbol;
    return Word(a, s);
  }

  NCPoly any_poly(const Alphabet& a, std::size_t max_terms, std::size_t max_degree) {
    NCPoly p(a);
    std::size_t terms = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < terms; ++i)
      p += poly_of(any_word(a, max_degree), small_rational());
    return p;
  }

  Matrix any_matrix(std::size_t n, long lo = -2, long hi = 2) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = integer(lo, hi);
    return m;
  }

  MatRep any_rep(const Alphabet& a, std::size_t n) {
    std::map<char, Matrix> assign;
    for (const auto& l : a.letters()) assign.emplace(l.symbol, any_matrix(n));
    return MatRep(a, n, std::move(assign));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
