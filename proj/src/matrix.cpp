#include "tdq/matrix.hpp"

#include <stdexcept>

namespace tdq {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string("matrix shape mismatch in ") + op);
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) {
      Scalar s = x;
      s.canonicalize();
      entries_.push_back(std::move(s));
    }
  }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (x != 0) return false;
  }
  return true;
}

std::optional<Scalar> Matrix::as_scalar() const {
  if (!is_square()) return std::nullopt;
  const Scalar s = rows_ ? (*this)(0, 0) : Scalar(0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? s : Scalar(0))) return std::nullopt;
    }
  }
  return s;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Scalar Matrix::trace() const {
  Scalar t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return reduce_rows(m).size();
}

bool Matrix::is_invertible() const { return is_square() && rank() == rows_; }

Matrix Matrix::inverse() const {
  if (!is_square()) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix aug = hconcat(identity(n));
  const auto pivots = reduce_rows(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw std::domain_error("matrix is singular");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hconcat row mismatch");
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(const Matrix& a) { return a * Scalar(-1); }
Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(a.rows(), b.cols());
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        t = aik * b(k, j);
        p(i, j) += t;
      }
    }
  }
  return p;
}

Vector operator*(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Matrix shifted(const Matrix& a, const Scalar& s) {
  if (!a.is_square()) throw std::invalid_argument("shift of a non-square matrix");
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i) m(i, i) -= s;
  return m;
}

Matrix power(const Matrix& a, unsigned p) {
  Matrix r = Matrix::identity(a.rows());
  for (unsigned i = 0; i < p; ++i) r = r * a;
  return r;
}

std::vector<std::size_t> reduce_rows(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  Scalar f;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
    }
    const Scalar inv = 1 / m(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(lead, j) != 0) m(r, j) -= f * m(lead, j);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += to_string(m(r, c));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace tdq
