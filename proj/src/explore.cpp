#include "tdq/explore.hpp"

#include <algorithm>
#include <random>

namespace tdq {

json to_json(const IrreducibilityFinding& f) {
  json j = {{"factors", to_json(f.spec)},
            {"dim", f.dim},
            {"algebra_dimension", f.algebra_dimension},
            {"full_algebra_dimension", f.dim * f.dim},
            {"verdict", to_string(f.verdict)}};
  j["shape"] = f.shape ? json(*f.shape) : json(nullptr);
  return j;
}

std::vector<Scalar> default_ratio_grid(const FieldConfig& cfg) {
  std::vector<Scalar> grid;
  for (int k = -4; k <= 4; ++k) grid.push_back(cfg.qpow(k));
  for (long v : {3L, 5L}) {
    grid.push_back(make_scalar(v));
    grid.push_back(make_scalar(1, v));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<IrreducibilityFinding> scan_irreducibility(const std::vector<ModuleSpec>& grid, const Scalar& a,
                                                       const Scalar& astar, Variant v, const FieldConfig& cfg) {
  std::vector<IrreducibilityFinding> out;
  for (const auto& spec : grid) {
    IrreducibilityFinding f;
    f.spec = spec;
    f.dim = spec.dim();
    const auto mp = tdpair_from_module(tensor_module(spec, cfg), a, astar, v, cfg);
    const auto irr = classify_irreducibility(mp.A, mp.Astar);
    f.algebra_dimension = irr.algebra_dimension;
    f.verdict = irr.verdict;
    if (mp.report.passed()) {
      try {
        f.shape = shape(TridiagonalPair::verified(mp.A, mp.Astar, cfg, a, astar));
      } catch (const VerificationError&) {
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

json to_json(const AntiautResult& r) {
  json j = {{"found", r.found}, {"symmetric", r.symmetric}, {"solution_dim", r.solution_dim}};
  j["S"] = r.S ? matrix_to_json(*r.S) : json(nullptr);
  return j;
}

AntiautResult find_antiautomorphism(const Matrix& a_mat, const Matrix& astar_mat) {
  const std::size_t n = a_mat.rows();
  if (!a_mat.is_square() || astar_mat.rows() != n || !astar_mat.is_square()) {
    throw std::invalid_argument("A and A* must be square of equal size");
  }
  // Row (i, j) of S X^T - X S = 0, unknown S_rc at column r n + c.
  Matrix sys(2 * n * n, n * n);
  const Matrix* xs[] = {&a_mat, &astar_mat};
  for (std::size_t blk = 0; blk < 2; ++blk) {
    const Matrix& x = *xs[blk];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = blk * n * n + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          sys(row, i * n + k) += x(j, k);
          sys(row, k * n + j) -= x(i, k);
        }
      }
    }
  }
  const Subspace sol = kernel(sys);
  AntiautResult res;
  res.solution_dim = sol.dim();
  auto as_matrix = [n](const Vector& v) {
    Matrix s(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) s(r, c) = v[r * n + c];
    }
    return s;
  };
  auto accept = [&](Matrix s) {
    if (!s.is_invertible()) return false;
    res.found = true;
    res.symmetric = s == s.transpose();
    res.S = std::move(s);
    return true;
  };
  const auto& basis = sol.basis_vectors();
  for (const auto& v : basis) {
    if (accept(as_matrix(v))) return res;
  }
  if (basis.size() < 2) return res;
  // Invertible combinations avoid a proper hypersurface; a few seeded
  // integer draws find one whenever it exists, with high probability.
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector v(n * n);
    for (const auto& b : basis) {
      const Scalar c = make_scalar(coef(rng));
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
    }
    if (accept(as_matrix(v))) return res;
  }
  return res;
}

}  // namespace tdq
