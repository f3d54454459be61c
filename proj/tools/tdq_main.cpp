// tdq: generate, verify and explore tridiagonal pairs of q-geometric type.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tdq/explore.hpp"
#include "tdq/suite.hpp"

namespace {

using namespace tdq;

constexpr int kPass = 0;
constexpr int kFalsified = 1;
constexpr int kInputError = 2;

struct Common {
  std::optional<std::string> q, a, astar;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--q", c.q, "deformation parameter q (rational, not 0 or +-1)");
  cmd->add_option("--a", c.a, "eigenvalue scale a");
  cmd->add_option("--astar", c.astar, "eigenvalue scale a*");
}

Scalar opt_scalar(const std::optional<std::string>& s, const char* fallback) {
  return parse_scalar(s ? *s : fallback);
}

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct GenerateArgs {
  Common common;
  std::string kind, t = "1", factors, variant = "minus", output;
  int d = 1;
};

int run_generate(const GenerateArgs& g) {
  const FieldConfig cfg(opt_scalar(g.common.q, "2"));
  ModuleSpec spec;
  if (g.kind == "eval") {
    spec.factors.push_back({g.d, parse_scalar(g.t)});
  } else {
    if (g.factors.empty()) throw std::invalid_argument("--factors is required for --kind tensor");
    spec = parse_factors(g.factors);
  }
  spec.validate();
  auto id = g.output.empty() ? std::string("instance") : g.output;
  const auto inst = generate_instance(spec, cfg, opt_scalar(g.common.a, "1"), opt_scalar(g.common.astar, "1"),
                                      parse_variant(g.variant), id);
  write_or_print(to_json(inst).dump(2) + "\n", g.output);
  return kPass;
}

struct VerifyArgs {
  Common common;
  std::string path, report, b = "1", bstar = "1";
  std::optional<std::string> perturb;
  bool json = false;
};

int run_verify(const VerifyArgs& v) {
  Instance inst = load_instance(v.path);
  if (v.common.q) inst.q = parse_scalar(*v.common.q);
  if (v.common.a) inst.a = parse_scalar(*v.common.a);
  if (v.common.astar) inst.astar = parse_scalar(*v.common.astar);
  SuiteOptions opts;
  opts.b = parse_scalar(v.b);
  opts.bstar = parse_scalar(v.bstar);
  opts.perturb = v.perturb;
  const auto rep = run_suite(inst, opts);
  if (!v.report.empty()) save_json(rep.to_json(), v.report);
  std::cout << (v.json ? rep.to_json().dump(2) + "\n" : rep.to_text());
  return rep.passed() ? kPass : kFalsified;
}

struct IrreducibilityArgs {
  Common common;
  std::string factors = "1:1,1:?", grid = "default", variant = "minus", report;
};

int run_scan(const IrreducibilityArgs& s) {
  const FieldConfig cfg(opt_scalar(s.common.q, "2"));
  const auto variant = parse_variant(s.variant);
  std::vector<ModuleSpec> specs;
  if (s.factors.find('?') == std::string::npos) {
    specs.push_back(parse_factors(s.factors));
  } else {
    std::vector<Scalar> values;
    if (s.grid == "default") {
      values = default_ratio_grid(cfg);
    } else {
      for (std::size_t pos = 0; pos < s.grid.size();) {
        const auto comma = std::min(s.grid.find(',', pos), s.grid.size());
        values.push_back(parse_scalar(std::string_view(s.grid).substr(pos, comma - pos)));
        pos = comma + 1;
      }
    }
    for (const auto& x : values) specs.push_back(parse_factors(s.factors, &x));
  }
  for (const auto& spec : specs) spec.validate();
  std::string out;
  for (const auto& f : scan_irreducibility(specs, opt_scalar(s.common.a, "1"), opt_scalar(s.common.astar, "1"),
                                           variant, cfg)) {
    out += to_json(f).dump() + "\n";
  }
  write_or_print(out, s.report);
  return kPass;
}

int run_antiaut(const std::string& path, const std::string& report) {
  const auto inst = load_instance(path);
  auto j = to_json(find_antiautomorphism(inst.A, inst.Astar));
  j["instance"] = inst.id;
  write_or_print(j.dump() + "\n", report);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for tridiagonal pairs of q-geometric type"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write an instance built from evaluation modules");
  add_common(generate, gen.common);
  generate->add_option("--kind", gen.kind, "eval or tensor")->required()->check(CLI::IsMember({"eval", "tensor"}));
  generate->add_option("--d", gen.d, "diameter of the evaluation module");
  generate->add_option("--t", gen.t, "evaluation parameter");
  generate->add_option("--factors", gen.factors, "tensor factors d:t,d:t,...");
  generate->add_option("--variant", gen.variant, "minus or plus")->check(CLI::IsMember({"minus", "plus"}));
  generate->add_option("-o,--output", gen.output, "output file (stdout when omitted)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "run every check on an instance");
  add_common(verify, ver.common);
  verify->add_option("instance", ver.path, "instance JSON file")->required();
  verify->add_option("--b", ver.b, "eigenvalue scale b");
  verify->add_option("--bstar", ver.bstar, "eigenvalue scale b*");
  verify->add_option("--report", ver.report, "write the JSON report here");
  verify->add_flag("--json", ver.json, "print the JSON report instead of text");
  verify->add_option("--perturb", ver.perturb, "scale one module generator by 2 before the relation checks");

  auto* explore = app.add_subcommand("explore", "empirical probes");
  explore->require_subcommand(1);
  IrreducibilityArgs scan;
  auto* irr = explore->add_subcommand("irreducibility", "Burnside verdicts over a parameter grid (JSON lines)");
  add_common(irr, scan.common);
  irr->add_option("--factors", scan.factors, "factor template; '?' marks the scanned t");
  irr->add_option("--grid", scan.grid, "'default' or a comma-separated list of rationals");
  irr->add_option("--variant", scan.variant, "minus or plus")->check(CLI::IsMember({"minus", "plus"}));
  irr->add_option("--report", scan.report, "write the JSON lines here");
  std::string antiaut_path, antiaut_report;
  auto* antiaut = explore->add_subcommand("antiaut", "search for S with S X^T S^-1 = X for X = A, A*");
  antiaut->add_option("instance", antiaut_path, "instance JSON file")->required();
  antiaut->add_option("--report", antiaut_report, "write the JSON line here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (verify->parsed()) return run_verify(ver);
    if (irr->parsed()) return run_scan(scan);
    if (antiaut->parsed()) return run_antiaut(antiaut_path, antiaut_report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
