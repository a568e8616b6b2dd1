#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wmn/scalar.hpp"

namespace wmn {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix unit(std::size_t n, std::size_t row, std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix& o) const = default;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  Matrix transpose() const;

  /// Kronecker product a ⊗ b.
  friend Matrix kron(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a);

std::size_t rank(Matrix a);

/// Basis of {x : a x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(Matrix a);

/// Inverse of a square matrix; throws DomainError when singular.
Matrix inverse(const Matrix& a);

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

/// Incrementally maintained span of vectors, kept in reduced echelon form.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v if it is independent of the current span; returns true when the span grew.
  bool insert(std::vector<Scalar> v);

  bool contains(std::vector<Scalar> v) const;

  /// Residue of v after eliminating pivots; zero iff v is in the span.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Matrix& a);

}  // namespace wmn
