#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tdq/uq.hpp"

namespace tdq {

struct EvaluationFactor {
  int d = 1;
  Scalar t = 1;
};

/// Tensor product of evaluation modules, factors applied left to right.
struct ModuleSpec {
  std::vector<EvaluationFactor> factors;

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
  std::size_t dim() const;
};

/// "1:1,1:3" -> factors (1,1), (1,3). The token "?" in a t slot is
/// replaced by `wildcard` when given; otherwise it is rejected.
ModuleSpec parse_factors(std::string_view text, const Scalar* wildcard = nullptr);
std::string to_string(const ModuleSpec& spec);

json to_json(const ModuleSpec& spec);
ModuleSpec module_spec_from_json(const json& j);

/// K1 v_i = q^{d-2i} v_i, K0 = K1^-1, e1+ v_i = [i]_q v_{i-1},
/// e1- v_i = [d-i]_q v_{i+1}, e0+ = t e1-, e0- = t^-1 e1+.
ChevalleyOctet evaluation_module(int d, const Scalar& t, const FieldConfig& cfg);

/// Coproduct K -> K(x)K, e+ -> e+(x)K + 1(x)e+, e- -> e-(x)1 + K^-1(x)e-.
ChevalleyOctet tensor_module(const ModuleSpec& spec, const FieldConfig& cfg);

Matrix kronecker(const Matrix& x, const Matrix& y);

struct ModulePair {
  Matrix A, Astar;
  PairReport report;
};

/// A = a y1-, A* = a* y0- (minus) or A = a y0+, A* = a* y1+ (plus), where
/// the y's come from the alternate translate of the octet.
ModulePair tdpair_from_module(const ChevalleyOctet& oct, const Scalar& a, const Scalar& astar, Variant v,
                              const FieldConfig& cfg);

}  // namespace tdq
