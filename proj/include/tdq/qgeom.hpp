#pragma once

#include <string>
#include <vector>

#include "tdq/tdpair.hpp"

namespace tdq {

/// B, B*, K, K* built from the decomposition eigendata of a pair.
struct OperatorQuartet {
  Matrix B, Bstar, K, Kstar;
  Matrix Kinv, Kstar_inv;
  Scalar b, bstar;

  friend bool operator==(const OperatorQuartet&, const OperatorQuartet&) = default;
};

/// One checked identity: its residual must be exactly zero.
struct RelationResult {
  std::string name;
  Matrix residual;
  bool pass() const { return residual.is_zero(); }
};

struct RelationReport {
  std::vector<RelationResult> results;

  bool passed() const;
  std::vector<std::string> failing() const;
  const RelationResult* find(std::string_view name) const;
  void append(const RelationReport& other);
};

/// Residual of (q X Y - q^{-1} Y X) - c (q - q^{-1}) I.
Matrix q_commutator_residual(const Matrix& x, const Matrix& y, const Scalar& c, const FieldConfig& cfg);

/// X^3 Y - [3]_q X^2 Y X + [3]_q X Y X^2 - Y X^3.
Matrix q_serre_residual(const Matrix& x, const Matrix& y, const FieldConfig& cfg);

/// B from [0*0] with b q^{2i-d}, B* from [D*D] with b* q^{d-2i},
/// K from [0*D] with q^{2i-d}, K* from [D*0] with q^{2i-d}.
OperatorQuartet build_quartet(const TridiagonalPair& pair, const Scalar& b, const Scalar& bstar);

/// The twelve q-commutator identities tying A, A*, B, B*, K, K*.
RelationReport check_bilinear_relations(const TridiagonalPair& pair, const OperatorQuartet& quartet);

/// The four q-Serre cubics for (A, A*) and (B, B*).
RelationReport check_q_serre(const TridiagonalPair& pair, const OperatorQuartet& quartet);

/// Every inclusion of the B/B*, K/K^-1 and K*/K*^-1 action tables on all six
/// decompositions. Empty when everything holds.
std::vector<std::string> check_bbkk_action_tables(const TridiagonalPair& pair, const OperatorQuartet& quartet,
                                                  const std::vector<Decomposition>& decs);

/// (B, B*) verified as a tridiagonal pair with parameters (b, b*) and the
/// same shape as the input pair.
PairReport verify_derived_pair(const TridiagonalPair& pair, const OperatorQuartet& quartet);

/// Swap A <-> A* and a <-> a*; the new pair's quartet (with b <-> b*)
/// should be (B*, B, K^-1, K*^-1).
TridiagonalPair swap_involution(const TridiagonalPair& pair);
/// Keep A, A*, invert q; the new quartet (with b <-> b*) should be
/// (B*, B, K*^-1, K^-1).
TridiagonalPair invert_q_involution(const TridiagonalPair& pair);

}  // namespace tdq
