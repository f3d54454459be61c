#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tdq/qgeom.hpp"
#include "tdq/serialize.hpp"

namespace tdq {

/// Which of the two module structures: A = a y1^-, A* = a* y0^- (Minus) or
/// A = a y0^+, A* = a* y1^+ (Plus).
enum class Variant { Minus, Plus };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

/// Action of the alternate generators y_i^{+-}, k_i^{+-1}.
struct AlternateOctet {
  Matrix y0p, y1p, y0m, y1m, k0, k1, k0inv, k1inv;

  static constexpr std::array<std::string_view, 8> kNames = {"y0p", "y1p", "y0m", "y1m",
                                                             "k0",  "k1",  "k0inv", "k1inv"};
  /// Throws std::invalid_argument for an unknown name.
  Matrix& generator(std::string_view name);
  const Matrix& generator(std::string_view name) const;

  friend bool operator==(const AlternateOctet&, const AlternateOctet&) = default;
};

/// Action of the Chevalley generators e_i^{+-}, K_i^{+-1}.
struct ChevalleyOctet {
  Matrix e0p, e1p, e0m, e1m, K0, K1, K0inv, K1inv;

  static constexpr std::array<std::string_view, 8> kNames = {"e0p", "e1p", "e0m", "e1m",
                                                             "K0",  "K1",  "K0inv", "K1inv"};
  Matrix& generator(std::string_view name);
  const Matrix& generator(std::string_view name) const;

  friend bool operator==(const ChevalleyOctet&, const ChevalleyOctet&) = default;
};

json to_json(const AlternateOctet& oct);
json to_json(const ChevalleyOctet& oct);
AlternateOctet alternate_from_json(const json& j);
ChevalleyOctet chevalley_from_json(const json& j);

/// Minus: (y0p, y1p, y0m, y1m, k0, k1) = (B*/b*, B/b, A*/a*, A/a, K, K^-1).
/// Plus:  (y0p, y1p, y0m, y1m, k0, k1) = (A/a, A*/a*, B*/b*, B/b, K*, K*^-1).
AlternateOctet assemble_module_structure(const TridiagonalPair& pair, const OperatorQuartet& quartet, Variant v);

/// Defining relations of the alternate presentation, exact residuals.
RelationReport check_alternate_relations(const AlternateOctet& oct, const FieldConfig& cfg);

/// K_i = k_i, e_i^- = y_i^- - k_i^-1, e_i^+ = (I - k_i y_i^+) / (q (q - q^-1)^2).
ChevalleyOctet chevalley_from_alternate(const AlternateOctet& oct, const FieldConfig& cfg);

/// k_i = K_i, y_i^- = K_i^-1 + e_i^-, y_i^+ = K_i^-1 - q (q - q^-1)^2 K_i^-1 e_i^+.
AlternateOctet alternate_from_chevalley(const ChevalleyOctet& oct, const FieldConfig& cfg);

/// Chevalley relations, exact residuals (brackets multiplied through by
/// q - q^-1).
RelationReport check_chevalley_relations(const ChevalleyOctet& oct, const FieldConfig& cfg);

struct WeightData {
  Scalar eps0, eps1;
  Decomposition weights;  // name Weight
};

/// k0-eigenspaces ordered so consecutive eigenvalues grow by q^2, with the
/// type (eps0, eps1) and the ladder inclusions verified. Throws
/// std::domain_error when k0 has no single q^2-string of rational
/// eigenvalues or k0 k1 is not scalar; VerificationError when a ladder
/// inclusion or the k1 pattern fails.
WeightData weight_decomposition(const AlternateOctet& oct, const FieldConfig& cfg);

/// Recomputes the module data that uniqueness forces and compares it with
/// the assembled octet. Empty when everything agrees.
std::vector<std::string> uniqueness_smoke_test(const TridiagonalPair& pair, const OperatorQuartet& quartet,
                                               Variant v);

}  // namespace tdq
