#pragma once

#include <string>

#include <json.hpp>

#include "crystalline/artinschreier.hpp"
#include "crystalline/fcrystal.hpp"
#include "crystalline/polygon.hpp"
#include "crystalline/strata.hpp"

namespace crystalline {

// Fixed field order everywhere: golden-file friendly output.
using Json = nlohmann::ordered_json;

// Parse with line/column diagnostics (ParseError).
Json parse_text(const std::string& text);

// Element: {p, d, m, coords}. Inside matrices a bare coords array is also
// accepted on input. With m_override > 0 the coordinates are reinterpreted
// as canonical lifts at the higher precision.
Json element_to_json(const GrElt& a);
GrElt element_from_json(const Json& j, int m_override = 0);

// Crystal: {p, d, m, n, rank, matrix}.
Json crystal_to_json(const FCrystal& c);
FCrystal crystal_from_json(const Json& j, int m_override = 0);

// Polygon: {kind, segments: [[num, den, mult]...]}.
Json polygon_to_json(const Polygon& p);
Polygon polygon_from_json(const Json& j);

Json break_points_to_json(const std::vector<BreakPoint>& bps);

// Family: {p, d, m, n, rank, vars, matrix} with entries as monomial lists
// {exponents, coeff}.
Json family_to_json(const FamilyCrystal& fam);
FamilyCrystal family_from_json(const Json& j, int m_override = 0);

// Artin-Schreier instance: {p, d, n, A}.
Json as_to_json(const ASInstance& inst);
ASInstance as_from_json(const Json& j);

Json point_to_json(const ClosedPoint& pt);
Json report_to_json(const StratumReport& report);

}  // namespace crystalline
