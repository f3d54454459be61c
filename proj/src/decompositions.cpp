#include "tdq/decomposition.hpp"

namespace tdq {

std::string_view to_string(DecompositionName name) {
  switch (name) {
    case DecompositionName::ZeroD: return "[0D]";
    case DecompositionName::ZeroStarDStar: return "[0*D*]";
    case DecompositionName::ZeroStarD: return "[0*D]";
    case DecompositionName::ZeroStarZero: return "[0*0]";
    case DecompositionName::DStarZero: return "[D*0]";
    case DecompositionName::DStarD: return "[D*D]";
    case DecompositionName::Weight: return "weight";
  }
  return "?";
}

std::size_t Decomposition::ambient_dim() const {
  return subspaces.empty() ? 0 : subspaces.front().ambient_dim();
}

Subspace Decomposition::at(int i) const {
  if (i < 0 || i > diameter()) return Subspace::zero(ambient_dim());
  return subspaces[static_cast<std::size_t>(i)];
}

Subspace Decomposition::range(int lo, int hi) const {
  lo = std::max(lo, 0);
  hi = std::min(hi, diameter());
  if (lo > hi) return Subspace::zero(ambient_dim());
  return subspace_sum(std::span<const Subspace>(subspaces).subspan(static_cast<std::size_t>(lo),
                                                                  static_cast<std::size_t>(hi - lo + 1)));
}

bool Decomposition::is_decomposition() const {
  if (subspaces.empty()) return false;
  for (const auto& u : subspaces) {
    if (u.is_zero()) return false;
  }
  return direct_sum_check(subspaces);
}

std::vector<std::size_t> Decomposition::dimensions() const {
  std::vector<std::size_t> dims;
  for (const auto& u : subspaces) dims.push_back(u.dim());
  return dims;
}

Subspace target_space(const Decomposition& dec, int i, Target target) {
  const int d = dec.diameter();
  switch (target) {
    case Target::Zero: return Subspace::zero(dec.ambient_dim());
    case Target::Next: return dec.at(i + 1);
    case Target::Prev: return dec.at(i - 1);
    case Target::Adjacent: return dec.range(i - 1, i + 1);
    case Target::Above: return dec.range(i + 1, d);
    case Target::Below: return dec.range(0, i - 1);
    case Target::UpToNext: return dec.range(0, i + 1);
    case Target::FromPrev: return dec.range(i - 1, d);
  }
  return Subspace::zero(dec.ambient_dim());
}

namespace {

std::string_view target_label(Target t) {
  switch (t) {
    case Target::Zero: return "0";
    case Target::Next: return "U_{i+1}";
    case Target::Prev: return "U_{i-1}";
    case Target::Adjacent: return "U_{i-1}+U_i+U_{i+1}";
    case Target::Above: return "U_{i+1}+...+U_d";
    case Target::Below: return "U_0+...+U_{i-1}";
    case Target::UpToNext: return "U_0+...+U_{i+1}";
    case Target::FromPrev: return "U_{i-1}+...+U_d";
  }
  return "?";
}

}  // namespace

std::vector<std::string> check_action_rule(const Matrix& x, const ActionRule& rule, const Scalar& coeff,
                                           const Decomposition& dec, const Scalar& q) {
  std::vector<std::string> findings;
  const int d = dec.diameter();
  for (int i = 0; i <= d; ++i) {
    Matrix op = x;
    std::string lhs = rule.op;
    if (rule.shift != Shift::None) {
      const int e = rule.shift == Shift::Rising ? 2 * i - d : d - 2 * i;
      op = shifted(x, coeff * pow(q, e));
      lhs = "(" + rule.op + " - " + rule.coeff_label + "q^" + std::to_string(e) + "I)";
    }
    if (!maps_into(op, dec.at(i), target_space(dec, i, rule.target))) {
      findings.push_back(std::string(to_string(dec.name)) + " i=" + std::to_string(i) + ": " + lhs +
                         "U_i not contained in " + std::string(target_label(rule.target)));
    }
  }
  return findings;
}

Matrix operator_from_eigendata(const Decomposition& dec, std::span<const Scalar> eigenvalues) {
  if (eigenvalues.size() != dec.subspaces.size()) {
    throw std::invalid_argument("eigenvalue count differs from decomposition length");
  }
  const std::size_t n = dec.ambient_dim();
  std::vector<Vector> cols;
  std::vector<Scalar> diag;
  for (std::size_t i = 0; i < dec.subspaces.size(); ++i) {
    for (const auto& v : dec.subspaces[i].basis_vectors()) {
      cols.push_back(v);
      diag.push_back(eigenvalues[i]);
    }
  }
  const Matrix p = Matrix::from_columns(cols, n);
  return p * Matrix::diagonal(diag) * p.inverse();
}

VerificationError::VerificationError(const std::string& what, std::vector<std::string> findings)
    : std::runtime_error(what + (findings.empty() ? "" : ": " + findings.front())),
      findings_(std::move(findings)) {}

}  // namespace tdq
