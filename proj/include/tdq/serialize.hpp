#pragma once

#include <json.hpp>

#include "tdq/matrix.hpp"
#include "tdq/subspace.hpp"

namespace tdq {

using json = nlohmann::json;

json scalar_to_json(const Scalar& s);
/// Accepts canonical strings and, for convenience, JSON integers.
Scalar scalar_from_json(const json& j);

/// Row-major nested arrays of scalar strings.
json matrix_to_json(const Matrix& m);
/// Throws std::invalid_argument on ragged or malformed input.
Matrix matrix_from_json(const json& j);

/// Canonical basis columns, as a matrix.
json subspace_to_json(const Subspace& w);

}  // namespace tdq
