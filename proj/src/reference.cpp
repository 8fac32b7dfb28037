#include "freehopf/reference.hpp"

namespace freehopf {

LinRep geometric_rep(const Alphabet& alphabet, const Rational& ratio) {
  Matrix step(1, 1);
  step(0, 0) = ratio;
  std::map<char, Matrix> mu;
  for (const auto& l : alphabet.letters()) mu.emplace(l.symbol, step);
  return LinRep(alphabet, Matrix::identity(1), std::move(mu), Matrix::identity(1));
}

LinRep counting_rep(const Alphabet& alphabet, char counted) {
  (void)alphabet.letter(counted);
  Matrix lambda = Matrix::from_rows({{1, 0}});
  Matrix gamma = Matrix::from_rows({{0}, {1}});
  std::map<char, Matrix> mu;
  for (const auto& l : alphabet.letters())
    mu.emplace(l.symbol, l.symbol == counted ? Matrix::from_rows({{1, 1}, {0, 1}})
                                             : Matrix::identity(2));
  return LinRep(alphabet, std::move(lambda), std::move(mu), std::move(gamma));
}

}  // namespace freehopf
