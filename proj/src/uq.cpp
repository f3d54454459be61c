#include "tdq/uq.hpp"

#include <algorithm>
#include <type_traits>

#include "tdq/polynomial.hpp"

namespace tdq {

std::string_view to_string(Variant v) { return v == Variant::Minus ? "minus" : "plus"; }

Variant parse_variant(std::string_view s) {
  if (s == "minus") return Variant::Minus;
  if (s == "plus") return Variant::Plus;
  throw std::invalid_argument("variant must be 'minus' or 'plus'");
}

namespace {

template <class Octet>
auto& lookup(Octet& oct, std::string_view name) {
  const auto& names = std::remove_const_t<Octet>::kNames;
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  const auto idx = static_cast<std::size_t>(it - names.begin());
  if constexpr (std::is_same_v<std::remove_const_t<Octet>, AlternateOctet>) {
    std::array refs{&oct.y0p, &oct.y1p, &oct.y0m, &oct.y1m, &oct.k0, &oct.k1, &oct.k0inv, &oct.k1inv};
    return *refs[idx];
  } else {
    std::array refs{&oct.e0p, &oct.e1p, &oct.e0m, &oct.e1m, &oct.K0, &oct.K1, &oct.K0inv, &oct.K1inv};
    return *refs[idx];
  }
}

template <class Octet>
json octet_to_json(const Octet& oct) {
  json j = json::object();
  for (auto name : Octet::kNames) j[std::string(name)] = matrix_to_json(oct.generator(name));
  return j;
}

template <class Octet>
Octet octet_from_json(const json& j) {
  Octet oct;
  for (auto name : Octet::kNames) {
    const std::string key(name);
    if (!j.contains(key)) throw std::invalid_argument("octet is missing generator '" + key + "'");
    oct.generator(name) = matrix_from_json(j.at(key));
  }
  return oct;
}

}  // namespace

Matrix& AlternateOctet::generator(std::string_view name) { return lookup(*this, name); }
const Matrix& AlternateOctet::generator(std::string_view name) const { return lookup(*this, name); }
Matrix& ChevalleyOctet::generator(std::string_view name) { return lookup(*this, name); }
const Matrix& ChevalleyOctet::generator(std::string_view name) const { return lookup(*this, name); }

json to_json(const AlternateOctet& oct) { return octet_to_json(oct); }
json to_json(const ChevalleyOctet& oct) { return octet_to_json(oct); }
AlternateOctet alternate_from_json(const json& j) { return octet_from_json<AlternateOctet>(j); }
ChevalleyOctet chevalley_from_json(const json& j) { return octet_from_json<ChevalleyOctet>(j); }

AlternateOctet assemble_module_structure(const TridiagonalPair& pair, const OperatorQuartet& qt, Variant v) {
  const Matrix a_part = pair.A() * Scalar(1 / pair.a());
  const Matrix as_part = pair.Astar() * Scalar(1 / pair.astar());
  const Matrix b_part = qt.B * Scalar(1 / qt.b);
  const Matrix bs_part = qt.Bstar * Scalar(1 / qt.bstar);
  if (v == Variant::Minus) return {bs_part, b_part, as_part, a_part, qt.K, qt.Kinv, qt.Kinv, qt.K};
  return {a_part, as_part, bs_part, b_part, qt.Kstar, qt.Kstar_inv, qt.Kstar_inv, qt.Kstar};
}

namespace {

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

std::string idx(int i) { return std::to_string(i); }

}  // namespace

RelationReport check_alternate_relations(const AlternateOctet& o, const FieldConfig& cfg) {
  if (!o.k0.is_square()) throw std::invalid_argument("octet generators must be square");
  const std::size_t n = o.k0.rows();
  for (auto name : AlternateOctet::kNames) {
    const auto& g = o.generator(name);
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("octet generators must share one size");
  }
  const Matrix id = Matrix::identity(n);
  const Matrix* yp[] = {&o.y0p, &o.y1p};
  const Matrix* ym[] = {&o.y0m, &o.y1m};
  const Matrix* k[] = {&o.k0, &o.k1};
  const Matrix* kinv[] = {&o.k0inv, &o.k1inv};
  const Scalar one = 1;
  RelationReport rep;
  for (int i = 0; i < 2; ++i) {
    rep.results.push_back({"inverse(k" + idx(i) + ")", (*k[i] * *kinv[i] - id).hconcat(*kinv[i] * *k[i] - id)});
  }
  {
    const Matrix c = o.k0 * o.k1;
    Matrix res(n, 0);
    for (auto name : AlternateOctet::kNames) res = res.hconcat(commutator(c, o.generator(name)));
    rep.results.push_back({"central(k0k1)", res});
  }
  for (int i = 0; i < 2; ++i) {
    rep.results.push_back({"qcomm(y" + idx(i) + "+,k" + idx(i) + ")=1", q_commutator_residual(*yp[i], *k[i], one, cfg)});
  }
  for (int i = 0; i < 2; ++i) {
    rep.results.push_back({"qcomm(k" + idx(i) + ",y" + idx(i) + "-)=1", q_commutator_residual(*k[i], *ym[i], one, cfg)});
  }
  for (int i = 0; i < 2; ++i) {
    rep.results.push_back(
        {"qcomm(y" + idx(i) + "-,y" + idx(i) + "+)=1", q_commutator_residual(*ym[i], *yp[i], one, cfg)});
  }
  const Matrix kk_inv = o.k0inv * o.k1inv;
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    Matrix r = q_commutator_residual(*yp[i], *ym[j], Scalar(0), cfg) - kk_inv * cfg.q_minus_qinv();
    rep.results.push_back({"qcomm(y" + idx(i) + "+,y" + idx(j) + "-)=k0^-1k1^-1", std::move(r)});
  }
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    rep.results.push_back({"serre(y" + idx(i) + "+,y" + idx(j) + "+)", q_serre_residual(*yp[i], *yp[j], cfg)});
    rep.results.push_back({"serre(y" + idx(i) + "-,y" + idx(j) + "-)", q_serre_residual(*ym[i], *ym[j], cfg)});
  }
  return rep;
}

ChevalleyOctet chevalley_from_alternate(const AlternateOctet& o, const FieldConfig& cfg) {
  const std::size_t n = o.k0.rows();
  const Matrix id = Matrix::identity(n);
  const Scalar c = cfg.q() * cfg.q_minus_qinv() * cfg.q_minus_qinv();
  const Scalar cinv = 1 / c;
  ChevalleyOctet out;
  out.K0 = o.k0;
  out.K1 = o.k1;
  out.K0inv = o.k0inv;
  out.K1inv = o.k1inv;
  out.e0m = o.y0m - o.k0inv;
  out.e1m = o.y1m - o.k1inv;
  out.e0p = (id - o.k0 * o.y0p) * cinv;
  out.e1p = (id - o.k1 * o.y1p) * cinv;
  return out;
}

AlternateOctet alternate_from_chevalley(const ChevalleyOctet& o, const FieldConfig& cfg) {
  const Scalar c = cfg.q() * cfg.q_minus_qinv() * cfg.q_minus_qinv();
  AlternateOctet out;
  out.k0 = o.K0;
  out.k1 = o.K1;
  out.k0inv = o.K0inv;
  out.k1inv = o.K1inv;
  out.y0m = o.K0inv + o.e0m;
  out.y1m = o.K1inv + o.e1m;
  out.y0p = o.K0inv - (o.K0inv * o.e0p) * c;
  out.y1p = o.K1inv - (o.K1inv * o.e1p) * c;
  return out;
}

RelationReport check_chevalley_relations(const ChevalleyOctet& o, const FieldConfig& cfg) {
  const std::size_t n = o.K0.rows();
  for (auto name : ChevalleyOctet::kNames) {
    const auto& g = o.generator(name);
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("octet generators must share one size");
  }
  const Matrix id = Matrix::identity(n);
  const Matrix* ep[] = {&o.e0p, &o.e1p};
  const Matrix* em[] = {&o.e0m, &o.e1m};
  const Matrix* K[] = {&o.K0, &o.K1};
  const Matrix* Kinv[] = {&o.K0inv, &o.K1inv};
  const Scalar q2 = cfg.qpow(2);
  const Scalar qm2 = cfg.qpow(-2);
  RelationReport rep;
  for (int i = 0; i < 2; ++i) {
    rep.results.push_back({"inverse(K" + idx(i) + ")", (*K[i] * *Kinv[i] - id).hconcat(*Kinv[i] * *K[i] - id)});
  }
  rep.results.push_back({"commute(K0,K1)", commutator(o.K0, o.K1)});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // Own node scales e^+ by q^2 and e^- by q^-2; the other node the reverse.
      const Scalar& sp = (i == j) ? q2 : qm2;
      const Scalar& sm = (i == j) ? qm2 : q2;
      rep.results.push_back({"conj(K" + idx(i) + ",e" + idx(j) + "+)", *K[i] * *ep[j] * *Kinv[i] - *ep[j] * sp});
      rep.results.push_back({"conj(K" + idx(i) + ",e" + idx(j) + "-)", *K[i] * *em[j] * *Kinv[i] - *em[j] * sm});
    }
  }
  for (int i = 0; i < 2; ++i) {
    rep.results.push_back({"bracket(e" + idx(i) + "+,e" + idx(i) + "-)",
                           commutator(*ep[i], *em[i]) * cfg.q_minus_qinv() - (*K[i] - *Kinv[i])});
  }
  rep.results.push_back({"bracket(e0+,e1-)", commutator(o.e0p, o.e1m)});
  rep.results.push_back({"bracket(e0-,e1+)", commutator(o.e0m, o.e1p)});
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    rep.results.push_back({"serre(e" + idx(i) + "+,e" + idx(j) + "+)", q_serre_residual(*ep[i], *ep[j], cfg)});
    rep.results.push_back({"serre(e" + idx(i) + "-,e" + idx(j) + "-)", q_serre_residual(*em[i], *em[j], cfg)});
  }
  return rep;
}

WeightData weight_decomposition(const AlternateOctet& oct, const FieldConfig& cfg) {
  const std::size_t n = oct.k0.rows();
  const auto lambdas = rational_eigenvalues(oct.k0);
  std::size_t total = 0;
  for (const auto& l : lambdas) total += eigenspace(oct.k0, l).dim();
  if (total != n) throw std::domain_error("k0 is not diagonalizable with rational eigenvalues");

  // The string starts at the unique eigenvalue whose q^-2 multiple is absent.
  const Scalar q2 = cfg.qpow(2);
  auto present = [&](const Scalar& x) { return std::binary_search(lambdas.begin(), lambdas.end(), x); };
  std::vector<Scalar> sources;
  for (const auto& l : lambdas) {
    if (!present(Scalar(l / q2))) sources.push_back(l);
  }
  if (sources.size() != 1) throw std::domain_error("eigenvalues of k0 do not form a single q^2-string");
  std::vector<Scalar> chain{sources.front()};
  while (chain.size() < lambdas.size() && present(Scalar(chain.back() * q2))) chain.push_back(chain.back() * q2);
  if (chain.size() != lambdas.size()) throw std::domain_error("eigenvalues of k0 do not form a single q^2-string");

  const auto alpha = (oct.k0 * oct.k1).as_scalar();
  if (!alpha) throw std::domain_error("k0 k1 does not act as a scalar");

  WeightData wd;
  const int d = static_cast<int>(chain.size()) - 1;
  wd.eps0 = chain.front() * cfg.qpow(d);
  wd.eps1 = *alpha / wd.eps0;
  wd.weights.name = DecompositionName::Weight;
  for (const auto& l : chain) wd.weights.subspaces.push_back(eigenspace(oct.k0, l));

  using enum Shift;
  using enum Target;
  std::vector<std::string> findings;
  auto run = [&](const Matrix& x, ActionRule rule, const Scalar& coeff) {
    for (auto& f : check_action_rule(x, rule, coeff, wd.weights, cfg.q())) findings.push_back(std::move(f));
  };
  const Scalar one = 1;
  run(oct.k0, {"k0", Rising, "eps0 ", Zero}, wd.eps0);
  run(oct.k1, {"k1", Falling, "eps1 ", Zero}, wd.eps1);
  run(oct.y0p * wd.eps0, {"eps0 y0+", Falling, "", Next}, one);
  run(oct.y1m * wd.eps1, {"eps1 y1-", Rising, "", Next}, one);
  run(oct.y0m * wd.eps0, {"eps0 y0-", Falling, "", Prev}, one);
  run(oct.y1p * wd.eps1, {"eps1 y1+", Rising, "", Prev}, one);
  if (!findings.empty()) throw VerificationError("weight ladder fails", std::move(findings));
  return wd;
}

std::vector<std::string> uniqueness_smoke_test(const TridiagonalPair& pair, const OperatorQuartet& qt, Variant v) {
  std::vector<std::string> findings;
  const auto oct = assemble_module_structure(pair, qt, v);
  const auto& cfg = pair.cfg();
  WeightData wd;
  try {
    wd = weight_decomposition(oct, cfg);
  } catch (const VerificationError& e) {
    return e.findings();
  } catch (const std::domain_error& e) {
    return {e.what()};
  }
  if (wd.eps0 != 1 || wd.eps1 != 1) {
    findings.push_back("type is (" + to_string(wd.eps0) + ", " + to_string(wd.eps1) + "), expected (1, 1)");
  }
  const int d = wd.weights.diameter();
  if (d != pair.diameter()) findings.push_back("weight decomposition has the wrong length");
  std::vector<Scalar> ev;
  for (int i = 0; i <= d; ++i) ev.push_back(cfg.qpow(2 * i - d));
  const Matrix rebuilt = operator_from_eigendata(wd.weights, ev);
  if (rebuilt != oct.k0) findings.push_back("k0 rebuilt from the weight spaces differs from k0");

  const auto decs = compute_six_decompositions(pair);
  const bool minus = v == Variant::Minus;
  const auto& expected = minus ? decs[2] : decs[4];
  if (wd.weights.subspaces != expected.subspaces) {
    findings.push_back(std::string("weight decomposition differs from ") + (minus ? "[0*D]" : "[D*0]"));
  }
  if (rebuilt != (minus ? qt.K : qt.Kstar)) {
    findings.push_back(std::string("rebuilt k0 differs from ") + (minus ? "K" : "K*"));
  }
  const Matrix& y_b = minus ? oct.y1p : oct.y1m;
  const Matrix& y_bs = minus ? oct.y0p : oct.y0m;
  if (y_b * qt.b != qt.B) findings.push_back(std::string("b ") + (minus ? "y1+" : "y1-") + " differs from B");
  if (y_bs * qt.bstar != qt.Bstar) {
    findings.push_back(std::string("b* ") + (minus ? "y0+" : "y0-") + " differs from B*");
  }
  return findings;
}

}  // namespace tdq
