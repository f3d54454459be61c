#include "tdq/instances.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace tdq {

void ModuleSpec::validate() const {
  if (factors.empty()) throw std::invalid_argument("at least one factor is required");
  for (const auto& f : factors) {
    if (f.d < 1) throw std::invalid_argument("d must be ≥ 1");
    if (f.t == 0) throw std::invalid_argument("t must be nonzero");
  }
}

std::size_t ModuleSpec::dim() const {
  std::size_t n = 1;
  for (const auto& f : factors) n *= static_cast<std::size_t>(f.d + 1);
  return n;
}

namespace {

int parse_diameter(std::string_view s) {
  int d = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed diameter '" + std::string(s) + "'");
  }
  return d;
}

}  // namespace

ModuleSpec parse_factors(std::string_view text, const Scalar* wildcard) {
  ModuleSpec spec;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("factor '" + std::string(item) + "' must look like d:t");
    }
    EvaluationFactor f;
    f.d = parse_diameter(item.substr(0, colon));
    const auto t = item.substr(colon + 1);
    if (t == "?") {
      if (!wildcard) throw std::invalid_argument("'?' is only allowed in exploration grids");
      f.t = *wildcard;
    } else {
      f.t = parse_scalar(t);
    }
    spec.factors.push_back(f);
  }
  return spec;
}

std::string to_string(const ModuleSpec& spec) {
  std::ostringstream out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i) out << ',';
    out << spec.factors[i].d << ':' << to_string(spec.factors[i].t);
  }
  return out.str();
}

json to_json(const ModuleSpec& spec) {
  json arr = json::array();
  for (const auto& f : spec.factors) arr.push_back({{"d", f.d}, {"t", scalar_to_json(f.t)}});
  return arr;
}

ModuleSpec module_spec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("factors must be an array");
  ModuleSpec spec;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("d") || !item.contains("t") || !item.at("d").is_number_integer()) {
      throw std::invalid_argument("each factor needs an integer d and a rational t");
    }
    spec.factors.push_back({item.at("d").get<int>(), scalar_from_json(item.at("t"))});
  }
  return spec;
}

ChevalleyOctet evaluation_module(int d, const Scalar& t, const FieldConfig& cfg) {
  ModuleSpec{{{d, t}}}.validate();
  const auto n = static_cast<std::size_t>(d + 1);
  std::vector<Scalar> k1(n), k1inv(n);
  Matrix e1p(n, n), e1m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const int ii = static_cast<int>(i);
    k1[i] = cfg.qpow(d - 2 * ii);
    k1inv[i] = cfg.qpow(2 * ii - d);
    if (i > 0) e1p(i - 1, i) = q_bracket(i, cfg);
    if (i < n - 1) e1m(i + 1, i) = q_bracket(static_cast<unsigned>(d - ii), cfg);
  }
  ChevalleyOctet oct;
  oct.K1 = Matrix::diagonal(k1);
  oct.K1inv = Matrix::diagonal(k1inv);
  oct.K0 = oct.K1inv;
  oct.K0inv = oct.K1;
  oct.e1p = e1p;
  oct.e1m = e1m;
  oct.e0p = e1m * t;
  oct.e0m = e1p * Scalar(1 / t);
  return oct;
}

Matrix kronecker(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (x(r, c) == 0) continue;
      for (std::size_t i = 0; i < y.rows(); ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) out(r * y.rows() + i, c * y.cols() + j) = x(r, c) * y(i, j);
      }
    }
  }
  return out;
}

ChevalleyOctet tensor_module(const ModuleSpec& spec, const FieldConfig& cfg) {
  spec.validate();
  ChevalleyOctet acc = evaluation_module(spec.factors[0].d, spec.factors[0].t, cfg);
  for (std::size_t f = 1; f < spec.factors.size(); ++f) {
    const auto x = evaluation_module(spec.factors[f].d, spec.factors[f].t, cfg);
    const Matrix i1 = Matrix::identity(acc.K0.rows());
    const Matrix i2 = Matrix::identity(x.K0.rows());
    ChevalleyOctet next;
    next.K0 = kronecker(acc.K0, x.K0);
    next.K1 = kronecker(acc.K1, x.K1);
    next.K0inv = kronecker(acc.K0inv, x.K0inv);
    next.K1inv = kronecker(acc.K1inv, x.K1inv);
    next.e0p = kronecker(acc.e0p, x.K0) + kronecker(i1, x.e0p);
    next.e1p = kronecker(acc.e1p, x.K1) + kronecker(i1, x.e1p);
    next.e0m = kronecker(acc.e0m, i2) + kronecker(acc.K0inv, x.e0m);
    next.e1m = kronecker(acc.e1m, i2) + kronecker(acc.K1inv, x.e1m);
    acc = std::move(next);
  }
  const auto rep = check_chevalley_relations(acc, cfg);
  if (!rep.passed()) {
    throw VerificationError("generated module violates the Chevalley relations", rep.failing());
  }
  return acc;
}

ModulePair tdpair_from_module(const ChevalleyOctet& oct, const Scalar& a, const Scalar& astar, Variant v,
                              const FieldConfig& cfg) {
  if (a == 0 || astar == 0) throw std::invalid_argument("a and a* must be nonzero");
  const auto alt = alternate_from_chevalley(oct, cfg);
  const auto wd = weight_decomposition(alt, cfg);
  if (wd.eps0 != 1 || wd.eps1 != 1) throw std::invalid_argument("module is not of type (1,1)");
  ModulePair out;
  if (v == Variant::Minus) {
    out.A = alt.y1m * a;
    out.Astar = alt.y0m * astar;
  } else {
    out.A = alt.y0p * a;
    out.Astar = alt.y1p * astar;
  }
  out.report = verify_tridiagonal_pair(out.A, out.Astar, cfg, a, astar);
  return out;
}

}  // namespace tdq
