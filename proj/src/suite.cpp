#include "tdq/suite.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace tdq {

json to_json(const Instance& inst) {
  json j = {{"q", scalar_to_json(inst.q)},
            {"a", scalar_to_json(inst.a)},
            {"astar", scalar_to_json(inst.astar)},
            {"A", matrix_to_json(inst.A)},
            {"Astar", matrix_to_json(inst.Astar)}};
  if (!inst.provenance.is_null()) j["provenance"] = inst.provenance;
  return j;
}

Instance instance_from_json(const json& j, std::string id) {
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  for (const char* key : {"q", "A", "Astar"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("instance is missing '") + key + "'");
  }
  Instance inst;
  inst.id = std::move(id);
  inst.q = scalar_from_json(j.at("q"));
  inst.a = j.contains("a") ? scalar_from_json(j.at("a")) : Scalar(1);
  inst.astar = j.contains("astar") ? scalar_from_json(j.at("astar")) : Scalar(1);
  inst.A = matrix_from_json(j.at("A"));
  inst.Astar = matrix_from_json(j.at("Astar"));
  if (j.contains("provenance")) inst.provenance = j.at("provenance");
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  auto id = path;
  if (const auto slash = id.find_last_of('/'); slash != std::string::npos) id = id.substr(slash + 1);
  if (const auto dot = id.rfind(".json"); dot != std::string::npos && dot + 5 == id.size()) id.resize(dot);
  return instance_from_json(j, id);
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

Instance generate_instance(const ModuleSpec& spec, const FieldConfig& cfg, const Scalar& a, const Scalar& astar,
                           Variant v, std::string id) {
  const auto mp = tdpair_from_module(tensor_module(spec, cfg), a, astar, v, cfg);
  Instance inst;
  inst.id = std::move(id);
  inst.q = cfg.q();
  inst.a = a;
  inst.astar = astar;
  inst.A = mp.A;
  inst.Astar = mp.Astar;
  inst.provenance = {{"kind", spec.factors.size() == 1 ? "eval" : "tensor"},
                     {"variant", std::string(to_string(v))},
                     {"factors", to_json(spec)}};
  return inst;
}

bool is_alternate_generator(std::string_view name) {
  const auto& n = AlternateOctet::kNames;
  return std::find(n.begin(), n.end(), name) != n.end();
}

bool is_chevalley_generator(std::string_view name) {
  const auto& n = ChevalleyOctet::kNames;
  return std::find(n.begin(), n.end(), name) != n.end();
}

bool SuiteReport::passed() const {
  return skipped.empty() && std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.pass; });
}

const GroupResult* SuiteReport::group(std::string_view name) const {
  for (const auto& g : groups) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

std::optional<std::string> SuiteReport::first_failing() const {
  for (const auto& g : groups) {
    if (!g.pass) return g.name;
  }
  return std::nullopt;
}

json SuiteReport::to_json(bool with_timing) const {
  json gs = json::array();
  for (const auto& g : groups) {
    json rels = json::array();
    for (const auto& r : g.relations) {
      rels.push_back({{"name", r.name}, {"pass", r.pass()}, {"residual", matrix_to_json(r.residual)}});
    }
    gs.push_back({{"name", g.name}, {"pass", g.pass}, {"findings", g.findings}, {"relations", rels},
                  {"detail", g.detail}});
  }
  json j = {{"instance", instance}, {"pass", passed()}, {"groups", gs}, {"skipped", skipped}};
  const auto first = first_failing();
  j["first_failing_group"] = first ? json(*first) : json(nullptr);
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "instance " << instance << '\n';
  for (const auto& g : groups) {
    out << (g.pass ? "  PASS  " : "  FAIL  ") << g.name << '\n';
    if (g.pass) continue;
    for (const auto& f : g.findings) out << "        " << f << '\n';
    for (const auto& r : g.relations) {
      if (r.pass()) continue;
      out << "        " << r.name << " residual:\n" << to_string(r.residual);
      if (out.str().back() != '\n') out << '\n';
    }
  }
  for (const auto& s : skipped) out << "  SKIP  " << s << '\n';
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

constexpr const char* kGroupOrder[] = {
    "eigenvalue_strings", "diagonalizable", "tridiagonal_condition", "irreducibility", "decompositions",
    "bilinear_relations", "q_serre",        "bk_action_tables",      "derived_pair",   "module_minus",
    "module_plus",        "presentation",   "weights",               "uniqueness",     "module_origin"};

std::vector<std::string> with_prefix(const std::vector<std::string>& all, std::string_view prefix) {
  std::vector<std::string> out;
  for (const auto& f : all) {
    if (f.starts_with(prefix)) out.push_back(f);
  }
  return out;
}

void mark_skipped(SuiteReport& rep) {
  for (const char* name : kGroupOrder) {
    if (!rep.group(name)) rep.skipped.emplace_back(name);
  }
}

GroupResult relation_group(std::string name, const RelationReport& r) {
  GroupResult g;
  g.name = std::move(name);
  g.relations = r.results;
  g.pass = r.passed();
  return g;
}

GroupResult findings_group(std::string name, std::vector<std::string> findings) {
  GroupResult g;
  g.name = std::move(name);
  g.pass = findings.empty();
  g.findings = std::move(findings);
  return g;
}

json shape_json(const ShapeVector& s) { return json(s); }

void prefix_relations(RelationReport& r, const std::string& prefix) {
  for (auto& x : r.results) x.name = prefix + x.name;
}

}  // namespace

SuiteReport run_suite(const Instance& inst, const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const FieldConfig cfg(inst.q);
  if (opts.b == 0 || opts.bstar == 0) throw std::invalid_argument("b and b* must be nonzero");
  if (opts.perturb && !is_alternate_generator(*opts.perturb) && !is_chevalley_generator(*opts.perturb)) {
    throw std::invalid_argument("unknown generator '" + *opts.perturb + "' for --perturb");
  }
  SuiteReport rep;
  rep.instance = inst.id;
  auto finish = [&]() {
    mark_skipped(rep);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  const PairReport pr = verify_tridiagonal_pair(inst.A, inst.Astar, cfg, inst.a, inst.astar);
  {
    auto g = findings_group("eigenvalue_strings", with_prefix(pr.failures, "eigenvalue string"));
    g.pass = pr.eigenvalue_strings;
    g.detail["diameter"] = pr.diameter ? json(*pr.diameter) : json(nullptr);
    rep.groups.push_back(std::move(g));
  }
  {
    auto g = findings_group("diagonalizable", with_prefix(pr.failures, "diagonalizable"));
    g.pass = pr.diagonalizable_a && pr.diagonalizable_astar;
    rep.groups.push_back(std::move(g));
  }
  // The tridiagonal condition is phrased in terms of the eigenvalue strings.
  if (pr.eigenvalue_strings) {
    auto g = findings_group("tridiagonal_condition", with_prefix(pr.failures, "tridiagonal condition"));
    g.pass = pr.tridiagonal_astar_on_v && pr.tridiagonal_a_on_vstar;
    rep.groups.push_back(std::move(g));
  }
  {
    auto g = findings_group("irreducibility", with_prefix(pr.failures, "irreducible"));
    g.pass = pr.irreducible();
    g.detail["verdict"] = std::string(to_string(pr.irreducibility));
    g.detail["algebra_dimension"] = pr.algebra_dimension;
    rep.groups.push_back(std::move(g));
  }
  if (!pr.passed()) {
    return finish();
  }

  const auto pair = TridiagonalPair::verified(inst.A, inst.Astar, cfg, inst.a, inst.astar);
  const auto decs = compute_six_decompositions(pair);
  {
    auto g = findings_group("decompositions", audit_decompositions(pair, decs));
    for (const auto& dec : decs) g.detail["dimensions"][std::string(to_string(dec.name))] = dec.dimensions();
    try {
      g.detail["shape"] = shape_json(shape(pair));
    } catch (const VerificationError& e) {
      for (const auto& f : e.findings()) g.findings.push_back(f);
      g.pass = false;
    }
    rep.groups.push_back(std::move(g));
    if (!rep.groups.back().pass) {
      return finish();
    }
  }

  const auto qt = build_quartet(pair, opts.b, opts.bstar);
  rep.groups.push_back(relation_group("bilinear_relations", check_bilinear_relations(pair, qt)));
  rep.groups.push_back(relation_group("q_serre", check_q_serre(pair, qt)));
  rep.groups.push_back(findings_group("bk_action_tables", check_bbkk_action_tables(pair, qt, decs)));
  {
    const auto dr = verify_derived_pair(pair, qt);
    auto g = findings_group("derived_pair", dr.failures);
    g.pass = dr.passed();
    g.detail["shape"] = shape_json(dr.shape);
    rep.groups.push_back(std::move(g));
  }

  const Variant variants[] = {Variant::Minus, Variant::Plus};
  std::vector<AlternateOctet> octets;
  for (auto v : variants) {
    auto oct = assemble_module_structure(pair, qt, v);
    if (opts.perturb && is_alternate_generator(*opts.perturb)) oct.generator(*opts.perturb) *= Scalar(2);
    octets.push_back(std::move(oct));
  }
  rep.groups.push_back(relation_group("module_minus", check_alternate_relations(octets[0], cfg)));
  rep.groups.push_back(relation_group("module_plus", check_alternate_relations(octets[1], cfg)));

  {
    GroupResult g;
    g.name = "presentation";
    RelationReport all;
    for (std::size_t k = 0; k < 2; ++k) {
      const std::string tag(to_string(variants[k]));
      auto chev = chevalley_from_alternate(octets[k], cfg);
      if (alternate_from_chevalley(chev, cfg) != octets[k]) {
        g.findings.push_back(tag + ": alternate -> Chevalley -> alternate is not the identity");
      }
      if (chevalley_from_alternate(alternate_from_chevalley(chev, cfg), cfg) != chev) {
        g.findings.push_back(tag + ": Chevalley -> alternate -> Chevalley is not the identity");
      }
      if (opts.perturb && is_chevalley_generator(*opts.perturb)) chev.generator(*opts.perturb) *= Scalar(2);
      auto r = check_chevalley_relations(chev, cfg);
      prefix_relations(r, tag + ":");
      all.append(r);
    }
    g.relations = all.results;
    g.pass = g.findings.empty() && all.passed();
    rep.groups.push_back(std::move(g));
  }

  {
    GroupResult g;
    g.name = "weights";
    for (auto v : variants) {
      const std::string tag(to_string(v));
      try {
        const auto wd = weight_decomposition(assemble_module_structure(pair, qt, v), cfg);
        g.detail[tag] = {{"type", {scalar_to_json(wd.eps0), scalar_to_json(wd.eps1)}},
                         {"dimensions", wd.weights.dimensions()}};
        if (wd.eps0 != 1 || wd.eps1 != 1) g.findings.push_back(tag + ": type is not (1,1)");
        const auto& expected = v == Variant::Minus ? decs[2] : decs[4];
        if (wd.weights.subspaces != expected.subspaces) {
          g.findings.push_back(tag + ": weight spaces differ from " + std::string(to_string(expected.name)));
        }
      } catch (const VerificationError& e) {
        for (const auto& f : e.findings()) g.findings.push_back(tag + ": " + f);
      } catch (const std::domain_error& e) {
        g.findings.push_back(tag + ": " + e.what());
      }
    }
    g.pass = g.findings.empty();
    rep.groups.push_back(std::move(g));
  }

  {
    GroupResult g;
    g.name = "uniqueness";
    for (auto v : variants) {
      for (const auto& f : uniqueness_smoke_test(pair, qt, v)) g.findings.push_back(std::string(to_string(v)) + ": " + f);
    }
    g.pass = g.findings.empty();
    rep.groups.push_back(std::move(g));
  }

  {
    GroupResult g;
    g.name = "module_origin";
    g.detail["checked"] = !inst.provenance.is_null();
    if (!inst.provenance.is_null()) {
      try {
        const auto& p = inst.provenance;
        const auto spec = module_spec_from_json(p.at("factors"));
        const auto v = parse_variant(p.at("variant").get<std::string>());
        const auto mp = tdpair_from_module(tensor_module(spec, cfg), inst.a, inst.astar, v, cfg);
        if (mp.A != inst.A || mp.Astar != inst.Astar) {
          g.findings.push_back("matrices differ from the recorded module " + to_string(spec));
        }
        if (!mp.report.passed()) g.findings.push_back("module does not yield a tridiagonal pair");
      } catch (const std::exception& e) {
        g.findings.push_back(std::string("provenance could not be replayed: ") + e.what());
      }
    }
    g.pass = g.findings.empty();
    rep.groups.push_back(std::move(g));
  }
  return finish();
}

}  // namespace tdq
