#pragma once

#include "mfw/bounds.hpp"
#include "mfw/castle.hpp"
#include "mfw/decompose.hpp"
#include "mfw/diagram.hpp"
#include "mfw/laurent.hpp"

#include "json.hpp"

#include <string>

namespace mfw {

using Json = nlohmann::ordered_json;

// {"terms": [[a, z, coeff], ...]} sorted by (a, z). Coefficients that do not
// fit in 64 bits are written as decimal strings.
Json poly_to_json(const LaurentPoly2& p);
LaurentPoly2 poly_from_json(const Json& j);

// {"crossings": [{"sign": 1, "arcs": [a0, a1, a2, a3]}, ...], "trivial_components": n}.
// Arc labels are any non-negative integers; each must occur exactly twice.
Json serialize_pd(const LinkDiagram& d);
LinkDiagram parse_pd(const Json& j);
LinkDiagram parse_pd(const std::string& text);

Json castle_to_json(const LinkDiagram& d, const SeifertStructure& s, const Castle& c);
// Floors as nodes, ladders as edges.
std::string castle_to_dot(const Castle& c);

Json bounds_to_json(const BoundsReport& r);

Json script_to_json(const MoveScript& s);
MoveScript script_from_json(const Json& j);

Json certificate_to_json(const SharpnessCertificate& c);

}  // namespace mfw
