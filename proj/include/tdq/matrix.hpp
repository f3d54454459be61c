#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdq/scalar.hpp"

namespace tdq {

using Vector = std::vector<Scalar>;

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& s);
  static Matrix diagonal(std::span<const Scalar> entries);
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> entries() const noexcept { return entries_; }
  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  bool is_zero() const;
  /// If the matrix is square and equals s*I, returns s.
  std::optional<Scalar> as_scalar() const;

  Matrix transpose() const;
  Scalar trace() const;
  std::size_t rank() const;
  /// Throws std::domain_error when singular or non-square.
  Matrix inverse() const;
  bool is_invertible() const;

  /// Columns of *this followed by the columns of other.
  Matrix hconcat(const Matrix& other) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Matrix a, const Scalar& s);
Matrix operator*(const Scalar& s, Matrix a);
Vector operator*(const Matrix& a, std::span<const Scalar> v);

/// a - s*I for square a.
Matrix shifted(const Matrix& a, const Scalar& s);

/// Integer power, p >= 0.
Matrix power(const Matrix& a, unsigned p);

/// Row-reduced echelon form of m in place; returns pivot columns.
std::vector<std::size_t> reduce_rows(Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace tdq
