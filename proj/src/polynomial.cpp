#include "tdq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tdq {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Scalar> c = coeffs_;
  const Scalar lc = leading();
  for (auto& x : c) x /= lc;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> r = a.coefficients();
  const auto& bc = b.coefficients();
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    const Scalar f = r[top] / b.leading();
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(k) + j] -= f * bc[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

namespace {

using Factorization = std::vector<std::pair<mpz_class, unsigned>>;

Factorization factor(mpz_class x) {
  Factorization f;
  if (x < 0) x = -x;
  auto take = [&](const mpz_class& p) {
    unsigned e = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
      x /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  };
  take(2);
  constexpr unsigned long kTrialBound = 1000000;
  for (unsigned long p = 3; p <= kTrialBound && p * p <= x; p += 2) take(mpz_class(p));
  if (x > 1) {
    if (mpz_probab_prime_p(x.get_mpz_t(), 30) == 0) {
      throw std::runtime_error("rational root search: integer " + x.get_str() +
                               " has no factor below the trial bound and is composite");
    }
    f.emplace_back(x, 1);
  }
  return f;
}

std::vector<mpz_class> divisors(const Factorization& f) {
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = ds.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

// Evaluates v^n * p(u/v) for an integer polynomial.
mpz_class homogeneous_eval(const std::vector<mpz_class>& c, const mpz_class& u, const mpz_class& v) {
  mpz_class acc = 0;
  mpz_class vpow = 1;
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * u + c[k] * vpow;
    vpow *= v;
  }
  return acc;
}

}  // namespace

std::vector<Scalar> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  if (p.degree() <= 0) return {};
  // Square-free part keeps the integers small when roots repeat.
  Polynomial sf = divmod(p, gcd(p, p.derivative())).first;
  std::vector<Scalar> roots;
  if (sf(Scalar(0)) == 0) {
    roots.emplace_back(0);
    sf = divmod(sf, Polynomial({Scalar(0), Scalar(1)})).first;
  }
  if (sf.degree() >= 1) {
    mpz_class den_lcm = 1;
    for (const auto& c : sf.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : sf.coefficients()) ic.push_back(mpz_class(c * den_lcm));
    const auto us = divisors(factor(ic.front()));
    const auto vs = divisors(factor(ic.back()));
    for (const auto& u : us) {
      for (const auto& v : vs) {
        if (gcd(u, v) != 1) continue;
        for (int sign : {1, -1}) {
          const mpz_class su = sign * u;
          if (homogeneous_eval(ic, su, v) == 0) {
            Scalar r(su, v);
            r.canonicalize();
            roots.push_back(r);
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Scalar> rational_eigenvalues(const Matrix& m) {
  if (m.rows() == 0) return {};
  return rational_roots(characteristic_polynomial(m));
}

}  // namespace tdq
