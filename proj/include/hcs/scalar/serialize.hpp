#pragma once

#include "hcs/scalar/tower_scalar.hpp"

#include <json.hpp>

namespace hcs {

using Json = nlohmann::ordered_json;

// Canonical JSON. Big integers are decimal strings, so the text form is bit-exact.
//   GaussianRational: [re_num, re_den, im_num, im_den]
//   RationalFunction: {"num": [[e, coeff], ...], "den": [[e, coeff], ...]}
//   TowerScalar:      {"level": n, "terms": [{"subset": [m, ...], "num": ..., "den": ...}, ...]}
Json to_json(const GaussianRational& c);
GaussianRational gaussian_from_json(const Json& j);
Json to_json(const RationalFunction& r);
RationalFunction rational_from_json(const Json& j);
Json to_json(const TowerScalar& t);
TowerScalar tower_from_json(const Json& j);

}  // namespace hcs
