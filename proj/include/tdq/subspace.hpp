#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tdq/matrix.hpp"

namespace tdq {

/// A subspace of K^n held in canonical form: the basis vectors are the
/// nonzero rows of a row-reduced echelon matrix, exposed as the columns of
/// basis() (reduced column-echelon). Equal subspaces compare bit-identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the columns of m.
  static Subspace column_span(const Matrix& m);
  static Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == ambient_; }

  /// Basis vectors as columns (ambient_dim x dim).
  Matrix basis() const;
  const std::vector<Vector>& basis_vectors() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& w) const;

  /// Coordinates of v in the canonical basis; v must lie in the subspace.
  Vector coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace eigenspace(const Matrix& m, const Scalar& theta);
Subspace subspace_sum(std::span<const Subspace> ws);
Subspace operator+(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& w1, const Subspace& w2);
bool direct_sum_check(std::span<const Subspace> ws);

/// X*W.
Subspace image(const Matrix& x, const Subspace& w);
/// X*U is contained in W, checked column by column of U's basis.
bool maps_into(const Matrix& x, const Subspace& u, const Subspace& w);

/// Smallest subspace containing v that is invariant under every generator.
Subspace spin(std::span<const Scalar> v, std::span<const Matrix> generators);

}  // namespace tdq
