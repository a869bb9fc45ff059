#pragma once

// JSON forms of library values. Field and ring elements are written with
// CoeffRing::format and read back with parse_coefficient.

#include <string>

#include <json.hpp>

#include "ftk/artin_schreier.hpp"
#include "ftk/groupoid.hpp"
#include "ftk/kummer.hpp"
#include "ftk/semidirect.hpp"

namespace ftk {

using nlohmann::json;

json to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const json& j);

json to_json(const ASCanonical& c);
ASCanonical as_canonical_from_json(const json& j);

json to_json(const KummerClass& c);
json to_json(const IndPoint& a);

json to_json(const SemidirectGroup& g);
/// {p, r, n, psi: [[...]]}; psi entries may be negative.
SemidirectGroup semidirect_group_from_json(const json& j);
/// "[-1]" or "[[0,1],[1,0]]".
FpMatrix parse_psi(const std::string& text, std::uint32_t p);

json to_json(const GTorsorClass& c);

/// {objects: [...], homs: {"x|y": [labels]}, compose: {"g|f": "h"}}; labels
/// must be globally unique. The compose entry for g|f means g o f.
FiniteGroupoid groupoid_from_json(const json& j);
json to_json(const FiniteGroupoid& g);
/// {"object": [labels]} for every object.
CentralAutSubgroup subgroup_from_json(const FiniteGroupoid& g, const json& j);

std::string to_string(const Rational& r);

}  // namespace ftk
