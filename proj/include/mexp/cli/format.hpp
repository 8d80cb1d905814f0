#pragma once

#include "mexp/basisfactory.hpp"
#include "mexp/fastexp.hpp"

#include <json.hpp>

#include <string>

namespace mexp::cli {

using nlohmann::json;

json triple_json(const Multiplicity& mu);

/// {"p", "mu", "delta", "exp", "tag", "k", "center", "radius", "alpha", "beta"};
/// absent optionals are null.
json report_json(const ExponentReport& r, const Multiplicity& mu, Prime p);
std::string report_text(const ExponentReport& r, const Multiplicity& mu, Prime p);

/// {"degree", "dx": [[i, j, c], ...], "dy": [...]} with monomials x^i y^j in
/// descending x-power; the zero field has degree null.
json field_json(const VectorField& t);
/// Inverse of field_json. Throws std::invalid_argument on malformed input.
VectorField field_from_json(const json& j, Prime p);

json basis_json(const BasisPair& b);

}  // namespace mexp::cli
