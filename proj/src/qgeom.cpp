#include "tdq/qgeom.hpp"

#include <algorithm>

namespace tdq {

bool RelationReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass(); });
}

std::vector<std::string> RelationReport::failing() const {
  std::vector<std::string> names;
  for (const auto& r : results) {
    if (!r.pass()) names.push_back(r.name);
  }
  return names;
}

const RelationResult* RelationReport::find(std::string_view name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

void RelationReport::append(const RelationReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

Matrix q_commutator_residual(const Matrix& x, const Matrix& y, const Scalar& c, const FieldConfig& cfg) {
  const Scalar q = cfg.q();
  const Scalar qinv = 1 / q;
  Matrix r = (x * y) * q - (y * x) * qinv;
  for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= c * cfg.q_minus_qinv();
  return r;
}

Matrix q_serre_residual(const Matrix& x, const Matrix& y, const FieldConfig& cfg) {
  const Scalar b3 = q_bracket(3, cfg);
  const Matrix x2 = x * x;
  const Matrix x3 = x2 * x;
  return x3 * y - (x2 * y * x) * b3 + (x * y * x2) * b3 - y * x3;
}

OperatorQuartet build_quartet(const TridiagonalPair& pair, const Scalar& b, const Scalar& bstar) {
  if (b == 0 || bstar == 0) throw std::invalid_argument("b and b* must be nonzero");
  const auto decs = compute_six_decompositions(pair);
  const int d = pair.diameter();
  const auto& cfg = pair.cfg();
  std::vector<Scalar> eb, ebs, ek;
  for (int i = 0; i <= d; ++i) {
    eb.push_back(b * cfg.qpow(2 * i - d));
    ebs.push_back(bstar * cfg.qpow(d - 2 * i));
    ek.push_back(cfg.qpow(2 * i - d));
  }
  OperatorQuartet out;
  out.b = b;
  out.bstar = bstar;
  out.B = operator_from_eigendata(decs[3], eb);       // [0*0]
  out.Bstar = operator_from_eigendata(decs[5], ebs);  // [D*D]
  out.K = operator_from_eigendata(decs[2], ek);       // [0*D]
  out.Kstar = operator_from_eigendata(decs[4], ek);   // [D*0]
  out.Kinv = out.K.inverse();
  out.Kstar_inv = out.Kstar.inverse();
  return out;
}

RelationReport check_bilinear_relations(const TridiagonalPair& pair, const OperatorQuartet& qt) {
  const auto& cfg = pair.cfg();
  const Matrix& A = pair.A();
  const Matrix& As = pair.Astar();
  const Scalar& a = pair.a();
  const Scalar& as = pair.astar();
  RelationReport rep;
  auto add = [&](std::string name, const Matrix& x, const Matrix& y, const Scalar& c) {
    rep.results.push_back({std::move(name), q_commutator_residual(x, y, c, cfg)});
  };
  add("qcomm(A,B)=ab", A, qt.B, Scalar(a * qt.b));
  add("qcomm(B,A*)=a*b", qt.B, As, Scalar(as * qt.b));
  add("qcomm(A*,B*)=a*b*", As, qt.Bstar, Scalar(as * qt.bstar));
  add("qcomm(B*,A)=ab*", qt.Bstar, A, Scalar(a * qt.bstar));
  add("qcomm(K^-1,A)=a", qt.Kinv, A, a);
  add("qcomm(B,K^-1)=b", qt.B, qt.Kinv, qt.b);
  add("qcomm(K,A*)=a*", qt.K, As, as);
  add("qcomm(B*,K)=b*", qt.Bstar, qt.K, qt.bstar);
  add("qcomm(A,K*)=a", A, qt.Kstar, a);
  add("qcomm(K*^-1,B)=b", qt.Kstar_inv, qt.B, qt.b);
  add("qcomm(A*,K*^-1)=a*", As, qt.Kstar_inv, as);
  add("qcomm(K*,B*)=b*", qt.Kstar, qt.Bstar, qt.bstar);
  return rep;
}

RelationReport check_q_serre(const TridiagonalPair& pair, const OperatorQuartet& qt) {
  const auto& cfg = pair.cfg();
  RelationReport rep;
  rep.results.push_back({"serre(A,A*)", q_serre_residual(pair.A(), pair.Astar(), cfg)});
  rep.results.push_back({"serre(A*,A)", q_serre_residual(pair.Astar(), pair.A(), cfg)});
  rep.results.push_back({"serre(B,B*)", q_serre_residual(qt.B, qt.Bstar, cfg)});
  rep.results.push_back({"serre(B*,B)", q_serre_residual(qt.Bstar, qt.B, cfg)});
  return rep;
}

namespace {

struct OperatorRules {
  ActionRule b, bstar, k, kinv, kstar, kstar_inv;
};

OperatorRules bbkk_rules(DecompositionName name) {
  using enum Shift;
  using enum Target;
  switch (name) {
    case DecompositionName::ZeroD:
      return {{"B", Falling, "b", Prev},  {"B*", Falling, "b*", Next},     {"K", Rising, "", Above},
              {"K^-1", Falling, "", Next}, {"K*", Falling, "", Prev},       {"K*^-1", Rising, "", Below}};
    case DecompositionName::ZeroStarDStar:
      return {{"B", Rising, "b", Prev},    {"B*", Rising, "b*", Next},      {"K", Rising, "", Prev},
              {"K^-1", Falling, "", Below}, {"K*", Falling, "", Above},      {"K*^-1", Rising, "", Next}};
    case DecompositionName::ZeroStarD:
      return {{"B", Rising, "b", Prev},   {"B*", Falling, "b*", Next},     {"K", Rising, "", Zero},
              {"K^-1", Falling, "", Zero}, {"K*", None, "", FromPrev},      {"K*^-1", None, "", UpToNext}};
    case DecompositionName::ZeroStarZero:
      return {{"B", Rising, "b", Zero},   {"B*", None, "", Adjacent},      {"K", Rising, "", Below},
              {"K^-1", Falling, "", Prev}, {"K*", Rising, "", Above},       {"K*^-1", Falling, "", Next}};
    case DecompositionName::DStarZero:
      return {{"B", Rising, "b", Next},       {"B*", Falling, "b*", Prev}, {"K", None, "", UpToNext},
              {"K^-1", None, "", FromPrev},    {"K*", Rising, "", Zero},    {"K*^-1", Falling, "", Zero}};
    case DecompositionName::DStarD:
      return {{"B", None, "", Adjacent},   {"B*", Falling, "b*", Zero},     {"K", Rising, "", Next},
              {"K^-1", Falling, "", Above}, {"K*", Rising, "", Prev},        {"K*^-1", Falling, "", Below}};
    case DecompositionName::Weight: break;
  }
  throw std::invalid_argument("no B/K action rules for the weight decomposition");
}

}  // namespace

std::vector<std::string> check_bbkk_action_tables(const TridiagonalPair& pair, const OperatorQuartet& qt,
                                                  const std::vector<Decomposition>& decs) {
  std::vector<std::string> findings;
  const Scalar& q = pair.cfg().q();
  const Scalar one = 1;
  for (const auto& dec : decs) {
    const auto r = bbkk_rules(dec.name);
    const std::pair<const Matrix*, std::pair<const ActionRule*, const Scalar*>> checks[] = {
        {&qt.B, {&r.b, &qt.b}},         {&qt.Bstar, {&r.bstar, &qt.bstar}},  {&qt.K, {&r.k, &one}},
        {&qt.Kinv, {&r.kinv, &one}},    {&qt.Kstar, {&r.kstar, &one}},       {&qt.Kstar_inv, {&r.kstar_inv, &one}},
    };
    for (const auto& [op, rule] : checks) {
      for (auto& f : check_action_rule(*op, *rule.first, *rule.second, dec, q)) findings.push_back(std::move(f));
    }
  }
  return findings;
}

PairReport verify_derived_pair(const TridiagonalPair& pair, const OperatorQuartet& qt) {
  PairReport rep = verify_tridiagonal_pair(qt.B, qt.Bstar, pair.cfg(), qt.b, qt.bstar);
  if (!rep.passed()) return rep;
  try {
    const auto derived = TridiagonalPair::verified(qt.B, qt.Bstar, pair.cfg(), qt.b, qt.bstar);
    const auto original_shape = shape(pair);
    const auto derived_shape = shape(derived);
    rep.shape = derived_shape;
    if (derived.diameter() != pair.diameter()) rep.failures.push_back("derived pair has a different diameter");
    if (derived_shape != original_shape) rep.failures.push_back("derived pair has a different shape");
    const auto decs = compute_six_decompositions(pair);
    if (derived.V() != decs[3].subspaces) {
      rep.failures.push_back("eigenspaces of B in standard order differ from [0*0]");
    }
    if (derived.Vstar() != decs[5].subspaces) {
      rep.failures.push_back("eigenspaces of B* in standard order differ from [D*D]");
    }
  } catch (const VerificationError& e) {
    for (const auto& f : e.findings()) rep.failures.push_back(f);
  }
  return rep;
}

TridiagonalPair swap_involution(const TridiagonalPair& pair) {
  return TridiagonalPair::verified(pair.Astar(), pair.A(), pair.cfg(), pair.astar(), pair.a());
}

TridiagonalPair invert_q_involution(const TridiagonalPair& pair) {
  return TridiagonalPair::verified(pair.A(), pair.Astar(), pair.cfg().inverted(), pair.a(), pair.astar());
}

}  // namespace tdq
