#include "freehopf/linrep.hpp"

#include "freehopf/errors.hpp"

namespace freehopf {

LinRep::LinRep(Alphabet alphabet, Matrix lambda, std::map<char, Matrix> mu, Matrix gamma)
    : alphabet_(std::move(alphabet)),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      gamma_(std::move(gamma)) {
  const std::size_t n = lambda_.cols();
  if (n == 0 || lambda_.rows() != 1) throw DomainError("lambda must be a nonempty 1xn row");
  if (gamma_.rows() != n || gamma_.cols() != 1)
    throw DomainError("gamma must be an " + std::to_string(n) + "x1 column");
  if (mu_.size() != alphabet_.size())
    throw DomainError("mu must assign exactly one matrix per letter");
  for (const auto& l : alphabet_.letters()) {
    auto it = mu_.find(l.symbol);
    if (it == mu_.end()) throw DomainError(std::string("no matrix for letter '") + l.symbol + "'");
    if (it->second.rows() != n || it->second.cols() != n)
      throw DomainError(std::string("matrix for letter '") + l.symbol + "' is not " +
                        std::to_string(n) + "x" + std::to_string(n));
  }
}

Matrix LinRep::mu(const Word& w) const {
  require_same_alphabet(alphabet_, w.alphabet(), "LinRep::mu");
  Matrix out = Matrix::identity(dim());
  for (char x : w.symbols()) out = out * mu_.at(x);
  return out;
}

Rational behavior(const LinRep& rep, const Word& w) {
  require_same_alphabet(rep.alphabet(), w.alphabet(), "behavior");
  // Row-vector sweep: n² per letter instead of n³.
  Matrix row = rep.lambda();
  for (char x : w.symbols()) row = row * rep.mu(x);
  return (row * rep.gamma())(0, 0);
}

}  // namespace freehopf
