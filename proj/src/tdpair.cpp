#include "tdq/tdpair.hpp"

#include <algorithm>

#include "tdq/polynomial.hpp"

namespace tdq {

bool is_symmetric_unimodal(const ShapeVector& rho) {
  const std::size_t n = rho.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rho[i] != rho[n - 1 - i]) return false;
  }
  const std::size_t d = n ? n - 1 : 0;
  for (std::size_t i = 1; 2 * i <= d; ++i) {
    if (rho[i - 1] > rho[i]) return false;
  }
  return true;
}

std::string_view to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Eigenspaces for the string c q^{sign*(2i-d)}, i = 0..d, if every one is
// nonzero and they fill the space.
std::optional<std::vector<Subspace>> string_eigenspaces(const Matrix& m, const Scalar& c, const FieldConfig& cfg,
                                                        int d, int sign) {
  std::vector<Subspace> spaces;
  std::size_t total = 0;
  for (int i = 0; i <= d; ++i) {
    Subspace w = eigenspace(m, c * cfg.qpow(sign * (2 * i - d)));
    if (w.is_zero()) return std::nullopt;
    total += w.dim();
    spaces.push_back(std::move(w));
  }
  if (total != m.rows()) return std::nullopt;
  return spaces;
}

// Diameter for which m carries the string, together with its eigenspaces.
std::optional<std::pair<int, std::vector<Subspace>>> find_string(const Matrix& m, const Scalar& c,
                                                                  const FieldConfig& cfg, int sign) {
  for (int d = 0; d < static_cast<int>(m.rows()); ++d) {
    if (auto s = string_eigenspaces(m, c, cfg, d, sign)) return std::make_pair(d, std::move(*s));
  }
  return std::nullopt;
}

bool diagonalizable_over_q(const Matrix& m) {
  std::size_t total = 0;
  for (const auto& lambda : rational_eigenvalues(m)) total += eigenspace(m, lambda).dim();
  return total == m.rows();
}

Decomposition as_decomposition(DecompositionName name, std::vector<Subspace> spaces) {
  return Decomposition{name, std::move(spaces)};
}

}  // namespace

PairReport verify_tridiagonal_pair(const Matrix& a_mat, const Matrix& astar_mat, const FieldConfig& cfg,
                                   const Scalar& a, const Scalar& astar) {
  if (!a_mat.is_square() || !astar_mat.is_square() || a_mat.rows() != astar_mat.rows() || a_mat.rows() == 0) {
    throw std::invalid_argument("A and A* must be nonempty square matrices of equal size");
  }
  if (a == 0 || astar == 0) throw std::invalid_argument("a and a* must be nonzero");
  PairReport rep;
  const std::size_t n = a_mat.rows();

  const auto a_string = find_string(a_mat, a, cfg, +1);
  const auto as_string = find_string(astar_mat, astar, cfg, -1);
  if (a_string && as_string && a_string->first == as_string->first) {
    rep.eigenvalue_strings = true;
    rep.diagonalizable_a = rep.diagonalizable_astar = true;
    rep.diameter = a_string->first;
  } else {
    rep.diagonalizable_a = a_string ? true : diagonalizable_over_q(a_mat);
    rep.diagonalizable_astar = as_string ? true : diagonalizable_over_q(astar_mat);
    if (!a_string) {
      rep.failures.push_back("eigenvalue string: A does not act as a q^{2i-d} (i=0..d) with all eigenspaces filling V");
    }
    if (!as_string) {
      rep.failures.push_back("eigenvalue string: A* does not act as a* q^{d-2i} (i=0..d) with all eigenspaces filling V");
    }
    if (a_string && as_string) {
      rep.failures.push_back("eigenvalue string: A has diameter " + std::to_string(a_string->first) +
                             " but A* has diameter " + std::to_string(as_string->first));
    }
    if (!rep.diagonalizable_a) rep.failures.push_back("diagonalizable: A is not diagonalizable over Q");
    if (!rep.diagonalizable_astar) rep.failures.push_back("diagonalizable: A* is not diagonalizable over Q");
  }

  if (rep.eigenvalue_strings) {
    const auto v = as_decomposition(DecompositionName::ZeroD, a_string->second);
    const auto vs = as_decomposition(DecompositionName::ZeroStarDStar, as_string->second);
    auto f1 = check_action_rule(astar_mat, ActionRule{"A*", Shift::None, "", Target::Adjacent}, Scalar(0), v,
                                cfg.q());
    auto f2 = check_action_rule(a_mat, ActionRule{"A", Shift::None, "", Target::Adjacent}, Scalar(0), vs, cfg.q());
    rep.tridiagonal_astar_on_v = f1.empty();
    rep.tridiagonal_a_on_vstar = f2.empty();
    for (auto& f : f1) rep.failures.push_back("tridiagonal condition (A* on V_i): " + f);
    for (auto& f : f2) rep.failures.push_back("tridiagonal condition (A on V*_i): " + f);
    if (rep.tridiagonal_astar_on_v && rep.tridiagonal_a_on_vstar) {
      // [0*D] dimensions; the full six-way cross-check lives in shape().
      const int d = *rep.diameter;
      for (int i = 0; i <= d; ++i) {
        rep.shape.push_back(subspace_intersect(vs.range(0, i), v.range(i, d)).dim());
      }
    }
  }

  const auto irr = classify_irreducibility(a_mat, astar_mat);
  rep.irreducibility = irr.verdict;
  rep.algebra_dimension = irr.algebra_dimension;
  if (!rep.irreducible()) {
    rep.failures.push_back("irreducible: generated algebra has dimension " + std::to_string(irr.algebra_dimension) +
                           " < " + std::to_string(n * n) + " (" + std::string(to_string(irr.verdict)) + ")");
  }
  return rep;
}

TridiagonalPair TridiagonalPair::verified(Matrix a_mat, Matrix astar_mat, FieldConfig cfg, Scalar a, Scalar astar) {
  PairReport rep = verify_tridiagonal_pair(a_mat, astar_mat, cfg, a, astar);
  if (!rep.passed()) throw VerificationError("not a tridiagonal pair of q-geometric type", rep.failures);
  TridiagonalPair p(std::move(cfg));
  p.d_ = *rep.diameter;
  p.a_mat_ = std::move(a_mat);
  p.astar_mat_ = std::move(astar_mat);
  p.a_ = std::move(a);
  p.astar_ = std::move(astar);
  for (int i = 0; i <= p.d_; ++i) {
    p.v_.push_back(eigenspace(p.a_mat_, p.theta(i)));
    p.vstar_.push_back(eigenspace(p.astar_mat_, p.theta_star(i)));
  }
  p.report_ = std::move(rep);
  return p;
}

Scalar TridiagonalPair::theta(int i) const { return a_ * cfg_.qpow(2 * i - d_); }
Scalar TridiagonalPair::theta_star(int i) const { return astar_ * cfg_.qpow(d_ - 2 * i); }

std::optional<StandardOrdering> standard_ordering_search(const Matrix& a_mat, const Matrix& astar_mat) {
  if (!a_mat.is_square() || a_mat.rows() != astar_mat.rows() || !astar_mat.is_square()) {
    throw std::invalid_argument("A and A* must be square matrices of equal size");
  }
  const auto lambdas = rational_eigenvalues(a_mat);
  std::vector<Subspace> spaces;
  std::size_t total = 0;
  for (const auto& l : lambdas) {
    spaces.push_back(eigenspace(a_mat, l));
    total += spaces.back().dim();
  }
  if (total != a_mat.rows()) throw std::invalid_argument("A is not diagonalizable over Q");
  const std::size_t k = lambdas.size();
  const std::size_t n = a_mat.rows();

  // Projection onto V_j along the other eigenspaces.
  auto projector = [&](std::size_t j) {
    Matrix e = Matrix::identity(n);
    for (std::size_t m = 0; m < k; ++m) {
      if (m == j) continue;
      e = e * shifted(a_mat, lambdas[m]) * Scalar(1 / (lambdas[j] - lambdas[m]));
    }
    return e;
  };
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (std::size_t j = 0; j < k; ++j) {
    const Matrix coupling = projector(j) * astar_mat;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j) continue;
      if (!image(coupling, spaces[i]).is_zero()) adj[i][j] = adj[j][i] = true;
    }
  }
  std::vector<std::size_t> degree(k, 0);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) degree[i] += adj[i][j] ? 1 : 0;
    edges += degree[i];
  }
  edges /= 2;
  if (edges + 1 != k) return std::nullopt;
  std::size_t start = 0;
  if (k > 1) {
    auto it = std::find(degree.begin(), degree.end(), std::size_t{1});
    if (it == degree.end()) return std::nullopt;
    start = static_cast<std::size_t>(it - degree.begin());
  }
  // Walk the path; a tree with k-1 edges and max degree 2 visited fully is a path.
  std::vector<std::size_t> order{start};
  std::vector<bool> seen(k, false);
  seen[start] = true;
  while (order.size() < k) {
    const std::size_t cur = order.back();
    std::size_t next = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (adj[cur][j] && !seen[j]) {
        if (next != k) return std::nullopt;  // branching
        next = j;
      }
    }
    if (next == k) return std::nullopt;
    seen[next] = true;
    order.push_back(next);
  }
  if (order.back() < order.front()) std::reverse(order.begin(), order.end());
  StandardOrdering out;
  for (auto i : order) {
    out.eigenvalues.push_back(lambdas[i]);
    out.eigenspaces.push_back(spaces[i]);
  }
  return out;
}

std::vector<Decomposition> compute_six_decompositions(const TridiagonalPair& pair) {
  const int d = pair.diameter();
  const Decomposition v = as_decomposition(DecompositionName::ZeroD, pair.V());
  const Decomposition vs = as_decomposition(DecompositionName::ZeroStarDStar, pair.Vstar());
  std::vector<Decomposition> out{v, vs};
  Decomposition zsd{DecompositionName::ZeroStarD, {}}, zsz{DecompositionName::ZeroStarZero, {}},
      dsz{DecompositionName::DStarZero, {}}, dsd{DecompositionName::DStarD, {}};
  for (int i = 0; i <= d; ++i) {
    zsd.subspaces.push_back(subspace_intersect(vs.range(0, i), v.range(i, d)));
    zsz.subspaces.push_back(subspace_intersect(vs.range(0, i), v.range(0, d - i)));
    dsz.subspaces.push_back(subspace_intersect(vs.range(d - i, d), v.range(0, d - i)));
    dsd.subspaces.push_back(subspace_intersect(vs.range(d - i, d), v.range(i, d)));
  }
  out.push_back(std::move(zsd));
  out.push_back(std::move(zsz));
  out.push_back(std::move(dsz));
  out.push_back(std::move(dsd));
  return out;
}

namespace {

struct PartialSums {
  // U_0+...+U_i and U_i+...+U_d in terms of the eigenspace sums.
  Subspace head, tail;
};

PartialSums expected_sums(DecompositionName name, const Decomposition& v, const Decomposition& vs, int i, int d) {
  switch (name) {
    case DecompositionName::ZeroD: return {v.range(0, i), v.range(i, d)};
    case DecompositionName::ZeroStarDStar: return {vs.range(0, i), vs.range(i, d)};
    case DecompositionName::ZeroStarD: return {vs.range(0, i), v.range(i, d)};
    case DecompositionName::ZeroStarZero: return {vs.range(0, i), v.range(0, d - i)};
    case DecompositionName::DStarZero: return {vs.range(d - i, d), v.range(0, d - i)};
    case DecompositionName::DStarD: return {vs.range(d - i, d), v.range(i, d)};
    case DecompositionName::Weight: break;
  }
  throw std::invalid_argument("no partial-sum rule for the weight decomposition");
}

struct AbRow {
  ActionRule a_rule, astar_rule;
};

AbRow ab_rules(DecompositionName name) {
  using enum Shift;
  using enum Target;
  switch (name) {
    case DecompositionName::ZeroD: return {{"A", Rising, "a", Zero}, {"A*", None, "", Adjacent}};
    case DecompositionName::ZeroStarDStar: return {{"A", None, "", Adjacent}, {"A*", Falling, "a*", Zero}};
    case DecompositionName::ZeroStarD: return {{"A", Rising, "a", Next}, {"A*", Falling, "a*", Prev}};
    case DecompositionName::ZeroStarZero: return {{"A", Falling, "a", Next}, {"A*", Falling, "a*", Prev}};
    case DecompositionName::DStarZero: return {{"A", Falling, "a", Next}, {"A*", Rising, "a*", Prev}};
    case DecompositionName::DStarD: return {{"A", Rising, "a", Next}, {"A*", Rising, "a*", Prev}};
    case DecompositionName::Weight: break;
  }
  throw std::invalid_argument("no A/A* action rule for the weight decomposition");
}

}  // namespace

std::vector<std::string> audit_decompositions(const TridiagonalPair& pair, const std::vector<Decomposition>& decs) {
  std::vector<std::string> findings;
  const int d = pair.diameter();
  const Decomposition v = as_decomposition(DecompositionName::ZeroD, pair.V());
  const Decomposition vs = as_decomposition(DecompositionName::ZeroStarDStar, pair.Vstar());
  for (const auto& dec : decs) {
    const std::string label(to_string(dec.name));
    if (dec.diameter() != d || !dec.is_decomposition()) {
      findings.push_back(label + ": not a decomposition of V of length d");
      continue;
    }
    for (int i = 0; i <= d; ++i) {
      const auto want = expected_sums(dec.name, v, vs, i, d);
      if (dec.range(0, i) != want.head) {
        findings.push_back(label + " i=" + std::to_string(i) + ": U_0+...+U_i differs from the eigenspace sum");
      }
      if (dec.range(i, d) != want.tail) {
        findings.push_back(label + " i=" + std::to_string(i) + ": U_i+...+U_d differs from the eigenspace sum");
      }
    }
    const auto rules = ab_rules(dec.name);
    for (auto& f : check_action_rule(pair.A(), rules.a_rule, pair.a(), dec, pair.cfg().q())) {
      findings.push_back(std::move(f));
    }
    for (auto& f : check_action_rule(pair.Astar(), rules.astar_rule, pair.astar(), dec, pair.cfg().q())) {
      findings.push_back(std::move(f));
    }
  }
  return findings;
}

std::vector<Decomposition> six_decompositions(const TridiagonalPair& pair) {
  auto decs = compute_six_decompositions(pair);
  auto findings = audit_decompositions(pair, decs);
  if (!findings.empty()) throw VerificationError("decomposition tables fail", std::move(findings));
  return decs;
}

ShapeVector shape(const TridiagonalPair& pair) {
  const auto decs = compute_six_decompositions(pair);
  const ShapeVector rho = decs[2].dimensions();  // [0*D]
  std::vector<std::string> findings;
  for (const auto& dec : decs) {
    if (dec.dimensions() != rho) {
      findings.push_back(std::string(to_string(dec.name)) + " has a different dimension sequence than [0*D]");
    }
  }
  if (!is_symmetric_unimodal(rho)) findings.push_back("shape is not symmetric and unimodal");
  if (!findings.empty()) throw VerificationError("shape is not well defined", std::move(findings));
  return rho;
}

}  // namespace tdq
