#include <deque>

#include "tdq/polynomial.hpp"
#include "tdq/tdpair.hpp"

namespace tdq {

namespace {

// Incremental echelon basis of flattened matrices. Rows are reduced against
// all earlier rows on insertion, so reduction in insertion order is exact.
class EchelonSpan {
 public:
  bool add(Vector v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar f = v[pivots_[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
      }
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    const Scalar inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

}  // namespace

std::vector<Matrix> generated_algebra_basis(const Matrix& x, const Matrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
    throw std::invalid_argument("generators must be square matrices of equal size");
  }
  const std::size_t n = x.rows();
  EchelonSpan span;
  std::vector<Matrix> basis;
  std::deque<std::size_t> queue;
  auto offer = [&](Matrix m) {
    if (span.add(flatten(m))) {
      basis.push_back(std::move(m));
      queue.push_back(basis.size() - 1);
    }
  };
  offer(Matrix::identity(n));
  // Words are closed under left multiplication by the generators.
  while (!queue.empty() && basis.size() < n * n) {
    const std::size_t k = queue.front();
    queue.pop_front();
    offer(x * basis[k]);
    offer(y * basis[k]);
  }
  return basis;
}

std::size_t generated_algebra_dimension(const Matrix& x, const Matrix& y) {
  return generated_algebra_basis(x, y).size();
}

IrreducibilityResult classify_irreducibility(const Matrix& x, const Matrix& y) {
  IrreducibilityResult res;
  const auto basis = generated_algebra_basis(x, y);
  const std::size_t n = x.rows();
  res.algebra_dimension = basis.size();
  if (basis.size() == n * n) {
    res.verdict = Irreducibility::Irreducible;
    return res;
  }
  // Candidate seeds: coordinate vectors, kernels of algebra elements and
  // rational eigenvectors of the generators. Any seed spinning to a proper
  // nonzero subspace is a witness.
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    seeds.push_back(std::move(e));
  }
  for (const auto& m : basis) {
    const Subspace k = kernel(m);
    seeds.insert(seeds.end(), k.basis_vectors().begin(), k.basis_vectors().end());
  }
  for (const Matrix* g : {&x, &y}) {
    try {
      for (const auto& l : rational_eigenvalues(*g)) {
        const Subspace e = eigenspace(*g, l);
        seeds.insert(seeds.end(), e.basis_vectors().begin(), e.basis_vectors().end());
      }
    } catch (const std::runtime_error&) {
      // eigenvalues out of reach; the other seeds still apply
    }
  }
  const Matrix gens[] = {x, y};
  for (const auto& s : seeds) {
    Subspace w = spin(s, gens);
    if (!w.is_zero() && !w.is_full()) {
      res.verdict = Irreducibility::Reducible;
      res.invariant_subspace = std::move(w);
      return res;
    }
  }
  res.verdict = Irreducibility::Inconclusive;
  return res;
}

}  // namespace tdq
