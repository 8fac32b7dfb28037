#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "freehopf/rational.hpp"

namespace freehopf {

/// Dense row-major matrix over ℚ.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws DomainError if the rows are ragged.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const;
  Matrix scaled(const Rational& factor) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(const Matrix& a) { return a.scaled(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product in standard row-major order:
/// (A⊗B)(i·p + k, j·q + l) = A(i,j)·B(k,l) for B of size p×q.
Matrix kron(const Matrix& a, const Matrix& b);

/// diag(a, b) with zero off-diagonal blocks.
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Horizontal [a | b] and vertical [a ; b] concatenation.
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

/// Exact rank. Rows are cleared of denominators, then reduced by
/// fraction-free (Bareiss) elimination over ℤ; the pivot in each column is the
/// first nonzero row at or below the current step.
std::size_t rank(const Matrix& m);

/// Incremental row basis over ℚ: rows are offered one at a time and kept
/// when independent of those already kept.
class RowBasis {
 public:
  explicit RowBasis(std::size_t width) : width_(width) {}

  /// Adds the row if independent; returns whether it was added.
  bool offer(const std::vector<Rational>& row);
  std::size_t size() const noexcept { return kept_.size(); }
  const std::vector<std::vector<Rational>>& kept() const noexcept { return kept_; }

  /// Coordinates c with row = Σ c_i·kept()[i], or nullopt if row is outside
  /// the span.
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& row) const;

 private:
  // Reduced echelon rows with, for each, its pivot column and its expression
  // in terms of kept rows.
  struct Echelon {
    std::vector<Rational> row;
    std::size_t pivot;
    std::vector<Rational> combo;
  };
  void reduce(std::vector<Rational>& row, std::vector<Rational>& combo) const;

  std::size_t width_;
  std::vector<std::vector<Rational>> kept_;
  std::vector<Echelon> echelon_;
};

}  // namespace freehopf
