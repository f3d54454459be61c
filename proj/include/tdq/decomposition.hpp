#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tdq/subspace.hpp"

namespace tdq {

/// The six named decompositions of a tridiagonal pair, plus the weight
/// space decomposition of a module.
enum class DecompositionName { ZeroD, ZeroStarDStar, ZeroStarD, ZeroStarZero, DStarZero, DStarD, Weight };

inline constexpr std::array<DecompositionName, 6> kSixDecompositions = {
    DecompositionName::ZeroD,        DecompositionName::ZeroStarDStar, DecompositionName::ZeroStarD,
    DecompositionName::ZeroStarZero, DecompositionName::DStarZero,     DecompositionName::DStarD};

/// "[0D]", "[0*D*]", ..., "weight".
std::string_view to_string(DecompositionName name);

/// An ordered direct sum U_0 + ... + U_d. Out-of-range indices read as 0.
struct Decomposition {
  DecompositionName name = DecompositionName::Weight;
  std::vector<Subspace> subspaces;

  int diameter() const { return static_cast<int>(subspaces.size()) - 1; }
  std::size_t ambient_dim() const;
  Subspace at(int i) const;
  /// U_lo + ... + U_hi, clipped to [0, d]; zero when empty.
  Subspace range(int lo, int hi) const;
  /// Every U_i nonzero and the sum direct and equal to the ambient space.
  bool is_decomposition() const;
  std::vector<std::size_t> dimensions() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Where an action rule sends U_i.
enum class Target {
  Zero,       // 0
  Next,       // U_{i+1}
  Prev,       // U_{i-1}
  Adjacent,   // U_{i-1} + U_i + U_{i+1}
  Above,      // U_{i+1} + ... + U_d
  Below,      // U_0 + ... + U_{i-1}
  UpToNext,   // U_0 + ... + U_{i+1}
  FromPrev,   // U_{i-1} + ... + U_d
};

/// How the operator is shifted before being applied to U_i:
/// X - coeff * q^{2i-d} (Rising), X - coeff * q^{d-2i} (Falling), or X as is.
enum class Shift { None, Rising, Falling };

struct ActionRule {
  std::string op;  // operator label used in findings, e.g. "A*" or "K^-1"
  Shift shift = Shift::None;
  std::string coeff_label;  // "a", "b*", "1", ...
  Target target = Target::Zero;
};

Subspace target_space(const Decomposition& dec, int i, Target target);

/// Checks (X - c q^{+-(2i-d)} I) U_i within the rule's target for all i.
/// Returns one finding per violated index; empty when the rule holds.
std::vector<std::string> check_action_rule(const Matrix& x, const ActionRule& rule, const Scalar& coeff,
                                           const Decomposition& dec, const Scalar& q);

/// The operator acting as eigenvalues[i] on dec.subspaces[i].
Matrix operator_from_eigendata(const Decomposition& dec, std::span<const Scalar> eigenvalues);

/// Raised when a claimed identity or table fails on an input that was
/// supposed to satisfy it. Carries every finding collected.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, std::vector<std::string> findings);
  const std::vector<std::string>& findings() const noexcept { return findings_; }

 private:
  std::vector<std::string> findings_;
};

}  // namespace tdq
