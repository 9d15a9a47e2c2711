#pragma once

#include "sepscope/criteria.hpp"

#include <json.hpp>

namespace sepscope {

using Json = nlohmann::json;

/// {"rows": n, "cols": m, "re": [[...]], "im": [[...]]}
Json matrix_to_json(const Cmat& m);
Cmat matrix_from_json(const Json& j);

/// Matrix JSON plus "dims": [dA, dB, ...].
Json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

/// Config metadata plus the N x M operator array.
Json povm_to_json(const SymmetricPovm& p);
SymmetricPovm povm_from_json(const Json& j);

Json verdict_to_json(const CriterionVerdict& v);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace sepscope
