#pragma once

// JSON and text renderings shared by the command-line front end and its tests.

#include "json.hpp"
#include <string>

#include "satake/hecke.hpp"
#include "satake/orbital.hpp"

namespace sph {

/// {"den": d, "terms": [{"v": e, "zeta": [c_0, ...]}]}, exponents ascending.
nlohmann::ordered_json to_json(const ValueScalar& x);
/// {"n": n, "monomials": [{"d": [...], "coeff": ...}]} in decreasing lexicographic order.
nlohmann::ordered_json to_json(const SymPoly& p);
/// {"n": n, "r": r, "basis": "c", "terms": [{"lambda": [...], "coeff": ...}]}.
nlohmann::ordered_json to_json(const HeckeElem& f);
nlohmann::ordered_json to_json(const Report& r, bool timing);
nlohmann::ordered_json to_json(const SeriesMatrix& m);

/// "v*m[1,0] + ..." and "c[2,0] - v^-2*c[1,1]".
std::string sympoly_text(const SymPoly& p);
std::string hecke_text(const HeckeElem& f);

}  // namespace sph
