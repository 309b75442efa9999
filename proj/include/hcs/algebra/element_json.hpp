#pragma once

#include "hcs/algebra/element.hpp"
#include "hcs/scalar/serialize.hpp"

namespace hcs {

// {"n": n, "terms": [{"perm": [w(1), ..., w(n)], "clifford": [l, ...], "coeff": <TowerScalar>}, ...]}
// Terms appear in basis-key order, so equal elements serialize to identical text.
Json to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const Json& j);

}  // namespace hcs
