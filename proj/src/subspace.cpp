#include "tdq/subspace.hpp"

#include <stdexcept>

namespace tdq {

namespace {

void require_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspaces live in different ambient spaces");
  }
}

// Reduces v against reduced echelon rows; returns the residue.
Vector residue(const std::vector<Vector>& rows, const std::vector<std::size_t>& pivots,
               std::span<const Scalar> v) {
  Vector r(v.begin(), v.end());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Scalar f = r[pivots[k]];
    if (f == 0) continue;
    for (std::size_t j = pivots[k]; j < r.size(); ++j) {
      if (rows[k][j] != 0) r[j] -= f * rows[k][j];
    }
  }
  return r;
}

bool is_zero_vector(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return column_span(Matrix::identity(ambient_dim));
}

Subspace Subspace::column_span(const Matrix& m) {
  Matrix t = m.transpose();
  const auto pivots = reduce_rows(t);
  Subspace s;
  s.ambient_ = m.rows();
  s.pivots_ = pivots;
  s.rows_.reserve(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) s.rows_.push_back(t.row(r));
  return s;
}

Subspace Subspace::span(std::span<const Vector> vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return zero(ambient_dim);
  return column_span(Matrix::from_columns(vectors, ambient_dim));
}

Matrix Subspace::basis() const { return Matrix::from_columns(rows_, ambient_); }

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length differs from ambient dimension");
  return is_zero_vector(residue(rows_, pivots_, v));
}

bool Subspace::contains(const Subspace& w) const {
  require_ambient(*this, w);
  for (const auto& v : w.rows_) {
    if (!contains(v)) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw std::domain_error("vector is not in the subspace");
  Vector c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  const auto pivots = reduce_rows(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace eigenspace(const Matrix& m, const Scalar& theta) {
  if (!m.is_square()) throw std::invalid_argument("eigenspace of a non-square matrix");
  return kernel(shifted(m, theta));
}

Subspace subspace_sum(std::span<const Subspace> ws) {
  if (ws.empty()) throw std::invalid_argument("sum of an empty list of subspaces");
  std::vector<Vector> all;
  for (const auto& w : ws) {
    require_ambient(ws.front(), w);
    all.insert(all.end(), w.basis_vectors().begin(), w.basis_vectors().end());
  }
  return Subspace::span(all, ws.front().ambient_dim());
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  const Subspace both[] = {a, b};
  return subspace_sum(both);
}

Subspace subspace_intersect(const Subspace& w1, const Subspace& w2) {
  require_ambient(w1, w2);
  const std::size_t n = w1.ambient_dim();
  if (w1.is_zero() || w2.is_zero()) return Subspace::zero(n);
  // x in ker [W1 | -W2]  <=>  W1 x1 = W2 x2; the intersection is W1 x1.
  const Matrix b1 = w1.basis();
  const Matrix joint = b1.hconcat(-w2.basis());
  const Subspace null = kernel(joint);
  std::vector<Vector> vs;
  for (const auto& x : null.basis_vectors()) {
    const Vector x1(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(w1.dim()));
    vs.push_back(b1 * std::span<const Scalar>(x1));
  }
  return Subspace::span(vs, n);
}

bool direct_sum_check(std::span<const Subspace> ws) {
  if (ws.empty()) return false;
  std::size_t total = 0;
  for (const auto& w : ws) {
    require_ambient(ws.front(), w);
    total += w.dim();
  }
  if (total != ws.front().ambient_dim()) return false;
  return subspace_sum(ws).dim() == total;
}

Subspace image(const Matrix& x, const Subspace& w) {
  std::vector<Vector> vs;
  for (const auto& v : w.basis_vectors()) vs.push_back(x * std::span<const Scalar>(v));
  return Subspace::span(vs, x.rows());
}

bool maps_into(const Matrix& x, const Subspace& u, const Subspace& w) {
  for (const auto& v : u.basis_vectors()) {
    if (!w.contains(x * std::span<const Scalar>(v))) return false;
  }
  return true;
}

Subspace spin(std::span<const Scalar> v, std::span<const Matrix> generators) {
  const std::size_t n = v.size();
  Subspace acc = Subspace::zero(n);
  std::vector<Vector> frontier{Vector(v.begin(), v.end())};
  std::vector<Vector> members;
  while (!frontier.empty()) {
    Vector u = std::move(frontier.back());
    frontier.pop_back();
    if (acc.contains(u)) continue;
    members.push_back(u);
    acc = Subspace::span(members, n);
    for (const auto& g : generators) frontier.push_back(g * std::span<const Scalar>(u));
  }
  return acc;
}

}  // namespace tdq
