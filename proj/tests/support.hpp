#pragma once

#include <random>

#include "tdq/suite.hpp"

namespace tdq::testing {

inline Scalar random_scalar(std::mt19937& rng, int num = 5, int den = 4) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  return make_scalar(n(rng), d(rng));
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int num = 5, int den = 4) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, num, den);
  }
  return m;
}

/// Random matrix of rank at most r: product of n x r and r x m factors.
inline Matrix random_low_rank(std::mt19937& rng, std::size_t n, std::size_t m, std::size_t r) {
  return random_matrix(rng, n, r) * random_matrix(rng, r, m);
}

/// Cofactor expansion; only for small matrices.
inline Scalar cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc != c) minor(r - 1, k++) = m(r, cc);
      }
    }
    const Scalar term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Scalar(-term);
  }
  return total;
}

inline Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

inline Subspace span_of(std::initializer_list<Vector> vs, std::size_t n) {
  std::vector<Vector> list(vs);
  return Subspace::span(list, n);
}

inline Instance e1_instance() {
  Instance inst;
  inst.id = "E1";
  inst.q = 2;
  inst.A = Matrix{{make_scalar(1, 2), 0}, {1, 2}};
  inst.Astar = Matrix{{2, 1}, {0, make_scalar(1, 2)}};
  return inst;
}

inline TridiagonalPair e1_pair() {
  const auto inst = e1_instance();
  return TridiagonalPair::verified(inst.A, inst.Astar, FieldConfig(inst.q), 1, 1);
}

inline TridiagonalPair module_pair(const std::string& factors, const Scalar& q, Variant v = Variant::Minus) {
  const FieldConfig cfg(q);
  const auto mp = tdpair_from_module(tensor_module(parse_factors(factors), cfg), 1, 1, v, cfg);
  return TridiagonalPair::verified(mp.A, mp.Astar, cfg, 1, 1);
}

}  // namespace tdq::testing
