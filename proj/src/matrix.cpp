#include "freehopf/matrix.hpp"

#include <utility>

#include "freehopf/errors.hpp"

namespace freehopf {

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::scaled(const Rational& factor) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  Matrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = a(i, j) * b(k, l);
    }
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hconcat: row count mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DomainError("vconcat: column count mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer denom_lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                                                     m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = m(i, j).get_num() * (denom_lcm / m(i, j).get_den());
  }

  // Bareiss: after step k every entry below the pivot row is divisible by the
  // previous pivot, so the division is exact.
  std::size_t r = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev_pivot = a[r][col];
    ++r;
  }
  return r;
}

void RowBasis::reduce(std::vector<Rational>& row, std::vector<Rational>& combo) const {
  for (const auto& e : echelon_) {
    if (row[e.pivot] == 0) continue;
    Rational f = row[e.pivot] / e.row[e.pivot];
    for (std::size_t j = e.pivot; j < width_; ++j) row[j] -= f * e.row[j];
    for (std::size_t j = 0; j < e.combo.size(); ++j) combo[j] -= f * e.combo[j];
  }
}

bool RowBasis::offer(const std::vector<Rational>& row) {
  if (row.size() != width_) throw DomainError("RowBasis: row width mismatch");
  std::vector<Rational> residual = row;
  std::vector<Rational> combo(kept_.size() + 1);
  reduce(residual, combo);
  std::size_t pivot = 0;
  while (pivot < width_ && residual[pivot] == 0) ++pivot;
  if (pivot == width_) return false;
  combo[kept_.size()] = 1;
  kept_.push_back(row);
  echelon_.push_back({std::move(residual), pivot, std::move(combo)});
  // Older combos are shorter than the current basis; pad them.
  for (auto& e : echelon_) e.combo.resize(kept_.size());
  return true;
}

std::optional<std::vector<Rational>> RowBasis::coordinates(const std::vector<Rational>& row) const {
  if (row.size() != width_) throw DomainError("RowBasis: row width mismatch");
  std::vector<Rational> residual = row;
  std::vector<Rational> combo(kept_.size());
  reduce(residual, combo);
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  for (auto& c : combo) c = -c;
  return combo;
}

}  // namespace freehopf
