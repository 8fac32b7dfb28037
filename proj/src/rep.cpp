#include "freehopf/rep.hpp"

#include "freehopf/errors.hpp"
#include "freehopf/freealg.hpp"

namespace freehopf {

MatRep::MatRep(Alphabet alphabet, std::size_t dim, std::map<char, Matrix> assign)
    : alphabet_(std::move(alphabet)), dim_(dim), assign_(std::move(assign)) {
  if (dim_ == 0) throw DomainError("representation dimension must be positive");
  if (assign_.size() != alphabet_.size())
    throw DomainError("representation must assign exactly one matrix per letter");
  for (const auto& l : alphabet_.letters()) {
    auto it = assign_.find(l.symbol);
    if (it == assign_.end())
      throw DomainError(std::string("no matrix for letter '") + l.symbol + "'");
    if (it->second.rows() != dim_ || it->second.cols() != dim_)
      throw DomainError(std::string("matrix for letter '") + l.symbol + "' is not " +
                        std::to_string(dim_) + "x" + std::to_string(dim_));
  }
}

Matrix DualVector::as_row() const {
  Matrix out(1, coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) out(0, j) = coords_[j];
  return out;
}

Matrix eval_rep(const MatRep& r, const Word& w) {
  require_same_alphabet(r.alphabet(), w.alphabet(), "eval_rep");
  Matrix out = Matrix::identity(r.dim());
  for (char x : w.symbols()) out = out * r[x];
  return out;
}

Matrix eval_rep(const MatRep& r, const NCPoly& p) {
  require_same_alphabet(r.alphabet(), p.alphabet(), "eval_rep");
  Matrix out(r.dim(), r.dim());
  for (const auto& [key, c] : p.terms())
    out += eval_rep(r, Word(r.alphabet(), key[0])).scaled(c);
  return out;
}

MatRep direct_sum(const MatRep& r1, const MatRep& r2) {
  require_same_alphabet(r1.alphabet(), r2.alphabet(), "direct_sum");
  std::map<char, Matrix> assign;
  for (const auto& l : r1.alphabet().letters())
    assign.emplace(l.symbol, block_diag(r1[l.symbol], r2[l.symbol]));
  return MatRep(r1.alphabet(), r1.dim() + r2.dim(), std::move(assign));
}

MatRep tensor_rep(const MatRep& r1, const MatRep& r2) {
  require_same_alphabet(r1.alphabet(), r2.alphabet(), "tensor_rep");
  const Matrix id1 = Matrix::identity(r1.dim());
  const Matrix id2 = Matrix::identity(r2.dim());
  std::map<char, Matrix> assign;
  for (const auto& l : r1.alphabet().letters()) {
    const Matrix& a = r1[l.symbol];
    const Matrix& b = r2[l.symbol];
    assign.emplace(l.symbol, l.group_like() ? kron(a, b) : kron(a, id2) + kron(id1, b));
  }
  return MatRep(r1.alphabet(), r1.dim() * r2.dim(), std::move(assign));
}

MatRep trivial_rep(const Alphabet& alphabet) {
  std::map<char, Matrix> assign;
  for (const auto& l : alphabet.letters()) {
    Matrix m(1, 1);
    m(0, 0) = l.group_like() ? 1 : 0;
    assign.emplace(l.symbol, std::move(m));
  }
  return MatRep(alphabet, 1, std::move(assign));
}

DualVector dual_action(const MatRep& r, const NCPoly& g, const DualVector& psi) {
  if (psi.size() != r.dim())
    throw DomainError("dual_action: dual vector length " + std::to_string(psi.size()) +
                      " does not match dimension " + std::to_string(r.dim()));
  Matrix row = psi.as_row() * eval_rep(r, antipode(g));
  std::vector<Rational> coords(r.dim());
  for (std::size_t j = 0; j < r.dim(); ++j) coords[j] = row(0, j);
  return DualVector(std::move(coords));
}

std::pair<Rational, Rational> pairing_invariance_check(const MatRep& r, const NCPoly& g,
                                                       const DualVector& psi, const Matrix& x) {
  require_same_alphabet(r.alphabet(), g.alphabet(), "pairing_invariance_check");
  if (r.alphabet().has_group_like())
    throw DomainError("no antipode: group-like letters present");
  if (psi.size() != r.dim() || x.rows() != r.dim() || x.cols() != 1)
    throw DomainError("pairing_invariance_check: dimension mismatch");

  Rational lhs = 0;
  const Tensor2 delta = coproduct(g);
  for (const auto& [key, c] : delta.terms()) {
    DualVector acted = dual_action(r, poly_of(Word(r.alphabet(), key[0])), psi);
    Matrix moved = eval_rep(r, Word(r.alphabet(), key[1])) * x;
    lhs += c * (acted.as_row() * moved)(0, 0);
  }
  Rational rhs = counit(g) * (psi.as_row() * x)(0, 0);
  return {lhs, rhs};
}

}  // namespace freehopf
