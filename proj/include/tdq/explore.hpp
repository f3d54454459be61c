#pragma once

#include <optional>
#include <vector>

#include "tdq/instances.hpp"

namespace tdq {

struct IrreducibilityFinding {
  ModuleSpec spec;
  std::size_t dim = 0;
  std::size_t algebra_dimension = 0;
  Irreducibility verdict = Irreducibility::Inconclusive;
  std::optional<ShapeVector> shape;  // when the pair verifies
};

json to_json(const IrreducibilityFinding& f);

/// {q^k : -4 <= k <= 4} together with 3, 1/3, 5, 1/5, sorted, duplicates
/// removed.
std::vector<Scalar> default_ratio_grid(const FieldConfig& cfg);

std::vector<IrreducibilityFinding> scan_irreducibility(const std::vector<ModuleSpec>& grid, const Scalar& a,
                                                       const Scalar& astar, Variant v, const FieldConfig& cfg);

struct AntiautResult {
  bool found = false;
  std::optional<Matrix> S;
  bool symmetric = false;
  std::size_t solution_dim = 0;
};

json to_json(const AntiautResult& r);

/// Looks for S with S A^T = A S and S A*^T = A* S, S invertible.
AntiautResult find_antiautomorphism(const Matrix& a_mat, const Matrix& astar_mat);

}  // namespace tdq
