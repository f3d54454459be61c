#pragma once

#include <vector>

#include "tdq/matrix.hpp"

namespace tdq {

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar operator()(const Scalar& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws std::domain_error when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);

/// det(xI - m), monic of degree n (Faddeev-LeVerrier).
Polynomial characteristic_polynomial(const Matrix& m);

/// Distinct rational roots, in increasing order.
std::vector<Scalar> rational_roots(const Polynomial& p);

/// Distinct rational eigenvalues of a square matrix, in increasing order.
std::vector<Scalar> rational_eigenvalues(const Matrix& m);

}  // namespace tdq
