#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdq/decomposition.hpp"

namespace tdq {

using ShapeVector = std::vector<std::size_t>;

/// rho_i = rho_{d-i} and rho_{i-1} <= rho_i for 1 <= i <= d/2.
bool is_symmetric_unimodal(const ShapeVector& rho);

enum class Irreducibility {
  Irreducible,   // generated algebra is the full matrix algebra
  Reducible,     // an explicit proper invariant subspace was found
  Inconclusive,  // algebra is proper but no rational invariant subspace was exhibited
};

std::string_view to_string(Irreducibility v);

struct PairReport {
  bool eigenvalue_strings = false;     // both maps carry the q-geometric strings
  bool diagonalizable_a = false;
  bool diagonalizable_astar = false;
  bool tridiagonal_astar_on_v = false;  // A* V_i within V_{i-1}+V_i+V_{i+1}
  bool tridiagonal_a_on_vstar = false;  // A V*_i within V*_{i-1}+V*_i+V*_{i+1}
  Irreducibility irreducibility = Irreducibility::Inconclusive;
  std::size_t algebra_dimension = 0;
  std::optional<int> diameter;
  ShapeVector shape;
  std::vector<std::string> failures;

  bool irreducible() const noexcept { return irreducibility == Irreducibility::Irreducible; }
  bool passed() const noexcept {
    return eigenvalue_strings && diagonalizable_a && diagonalizable_astar && tridiagonal_astar_on_v &&
           tridiagonal_a_on_vstar && irreducible() && failures.empty();
  }
};

/// Checks the four tridiagonal-pair axioms for eigenvalue strings
/// theta_i = a q^{2i-d}, theta*_i = a* q^{d-2i}. The diameter d is found
/// from the spectrum. Throws std::invalid_argument on shape mismatch; every
/// other failure is recorded in the report.
PairReport verify_tridiagonal_pair(const Matrix& a_mat, const Matrix& astar_mat, const FieldConfig& cfg,
                                   const Scalar& a, const Scalar& astar);

/// A verified tridiagonal pair of q-geometric type with its standard
/// eigenspace orderings.
class TridiagonalPair {
 public:
  /// Throws VerificationError carrying the report failures when the
  /// matrices do not form such a pair.
  static TridiagonalPair verified(Matrix a_mat, Matrix astar_mat, FieldConfig cfg, Scalar a, Scalar astar);

  const FieldConfig& cfg() const noexcept { return cfg_; }
  int diameter() const noexcept { return d_; }
  std::size_t dim() const noexcept { return a_mat_.rows(); }
  const Matrix& A() const noexcept { return a_mat_; }
  const Matrix& Astar() const noexcept { return astar_mat_; }
  const Scalar& a() const noexcept { return a_; }
  const Scalar& astar() const noexcept { return astar_; }
  /// a q^{2i-d}
  Scalar theta(int i) const;
  /// a* q^{d-2i}
  Scalar theta_star(int i) const;
  const std::vector<Subspace>& V() const noexcept { return v_; }
  const std::vector<Subspace>& Vstar() const noexcept { return vstar_; }
  const PairReport& report() const noexcept { return report_; }

 private:
  TridiagonalPair(FieldConfig cfg) : cfg_(std::move(cfg)) {}

  FieldConfig cfg_;
  int d_ = 0;
  Matrix a_mat_, astar_mat_;
  Scalar a_, astar_;
  std::vector<Subspace> v_, vstar_;
  PairReport report_;
};

struct StandardOrdering {
  std::vector<Scalar> eigenvalues;
  std::vector<Subspace> eigenspaces;
};

/// Orders the eigenspaces of A as a path in the graph where i ~ j when
/// A* V_i has a nonzero component in V_j. Returns nullopt when the graph is
/// not a path. Of the two path orders, the one starting at the smaller
/// eigenvalue is returned. Throws std::invalid_argument when A is not
/// diagonalizable over the rationals.
std::optional<StandardOrdering> standard_ordering_search(const Matrix& a_mat, const Matrix& astar_mat);

/// [0D], [0*D*], [0*D], [0*0], [D*0], [D*D] without any checks.
std::vector<Decomposition> compute_six_decompositions(const TridiagonalPair& pair);

/// Findings for the decomposition property, the partial-sum table and the
/// A/A* action table. Empty when everything holds.
std::vector<std::string> audit_decompositions(const TridiagonalPair& pair, const std::vector<Decomposition>& decs);

/// The six decompositions, verified; throws VerificationError otherwise.
std::vector<Decomposition> six_decompositions(const TridiagonalPair& pair);

/// Dimension vector, cross-checked on all six decompositions; throws
/// VerificationError when they disagree or the shape is not symmetric and
/// unimodal.
ShapeVector shape(const TridiagonalPair& pair);

/// Spanning set (a basis) of the unital algebra generated by x and y.
std::vector<Matrix> generated_algebra_basis(const Matrix& x, const Matrix& y);
std::size_t generated_algebra_dimension(const Matrix& x, const Matrix& y);

struct IrreducibilityResult {
  Irreducibility verdict = Irreducibility::Inconclusive;
  std::size_t algebra_dimension = 0;
  std::optional<Subspace> invariant_subspace;  // set when Reducible
};

/// Burnside certificate, plus a search for a proper invariant subspace
/// when the certificate is absent.
IrreducibilityResult classify_irreducibility(const Matrix& x, const Matrix& y);

}  // namespace tdq
