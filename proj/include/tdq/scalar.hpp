#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tdq {

/// Exact rational field element. GMP keeps every value in lowest terms with
/// a positive denominator once canonicalized; all constructors in this
/// library go through `make_scalar` / `parse_scalar`, which canonicalize.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& s);

/// Integer power with negative exponents allowed (x must be nonzero then).
Scalar pow(const Scalar& x, int exponent);

/// The deformation parameter q. Over the rationals, q not in {0, 1, -1}
/// is equivalent to q not being a root of unity.
class FieldConfig {
 public:
  explicit FieldConfig(Scalar q);

  const Scalar& q() const noexcept { return q_; }

  /// q^e for any integer e.
  Scalar qpow(int e) const { return pow(q_, e); }

  /// q - q^{-1}; nonzero by the class invariant.
  Scalar q_minus_qinv() const { return q_ - 1 / q_; }

  /// The same field with q replaced by q^{-1}.
  FieldConfig inverted() const { return FieldConfig(1 / q_); }

 private:
  Scalar q_;
};

/// [n]_q = (q^n - q^{-n}) / (q - q^{-1}).
Scalar q_bracket(unsigned n, const FieldConfig& cfg);

}  // namespace tdq
