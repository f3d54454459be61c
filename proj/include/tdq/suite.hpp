#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdq/instances.hpp"

namespace tdq {

/// Matrices of a candidate pair plus the parameters needed to check it.
struct Instance {
  std::string id;
  Scalar q = 2;
  Scalar a = 1, astar = 1;
  Matrix A, Astar;
  json provenance;  // null, or {"kind", "variant", "factors"}
};

json to_json(const Instance& inst);
/// Throws std::invalid_argument on schema errors.
Instance instance_from_json(const json& j, std::string id);
/// Throws std::runtime_error when the file cannot be read and
/// std::invalid_argument when it is not a valid instance.
Instance load_instance(const std::string& path);
void save_json(const json& j, const std::string& path);

/// Builds the pair from a module spec; the instance records its provenance.
Instance generate_instance(const ModuleSpec& spec, const FieldConfig& cfg, const Scalar& a, const Scalar& astar,
                           Variant v, std::string id);

struct SuiteOptions {
  Scalar b = 1, bstar = 1;
  /// Generator scaled by 2 before the relation checks: an alternate name
  /// ("y1p", "k0", ...) perturbs both module structures, a Chevalley name
  /// ("e1p", "K0", ...) perturbs the translated octets.
  std::optional<std::string> perturb;
};

struct GroupResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> findings;
  std::vector<RelationResult> relations;
  json detail = json::object();
};

struct SuiteReport {
  std::string instance;
  std::vector<GroupResult> groups;
  std::vector<std::string> skipped;  // groups not reached after a fatal failure
  double elapsed_ms = 0;

  bool passed() const;
  const GroupResult* group(std::string_view name) const;
  std::optional<std::string> first_failing() const;
  /// Residuals are always included. Set with_timing to false for a
  /// byte-stable rendering.
  json to_json(bool with_timing = true) const;
  /// One line per group; findings and residuals only for failures.
  std::string to_text() const;
};

/// Every group in pipeline order. Throws std::invalid_argument for inputs
/// that cannot be checked at all (shape mismatch, q in {0, 1, -1}, ...).
SuiteReport run_suite(const Instance& inst, const SuiteOptions& opts = {});

bool is_alternate_generator(std::string_view name);
bool is_chevalley_generator(std::string_view name);

}  // namespace tdq
