#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ginv/scalar.hpp"

namespace ginv {

/// Dense row-major matrix of exact Gaussian rationals.
///
/// Zero-extent shapes (n x 0, 0 x n, 0 x 0) are valid values: they arise from
/// rank-0 full-rank factorizations and multiply out to zero matrices, so the
/// inverse constructions stay total on the zero matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  /// Row-wise integer literal, e.g. Matrix{{1, 0}, {0, 1}}.
  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_real() const;

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> entries() const { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// Conjugate transpose a*.
  Matrix adjoint() const;
  Matrix transpose() const;

  Matrix column(std::size_t c) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix top_rows(std::size_t count) const;

  /// Multiline text, one row per line, entries separated by single spaces.
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [a | b]; requires equal row counts.
Matrix hstack(const Matrix& a, const Matrix& b);

/// Integer power of a square matrix; power 0 is the identity.
Matrix power(const Matrix& a, unsigned exponent);

}  // namespace ginv
