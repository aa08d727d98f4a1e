#pragma once

#include "eis4/matrix.hpp"
#include "eis4/period_polys.hpp"
#include "eis4/qseries.hpp"
#include "eis4/relations.hpp"
#include "eis4/report.hpp"
#include "eis4/ttilde_numeric.hpp"

#include <json.hpp>

namespace eis4 {

using Json = nlohmann::ordered_json;

/// Exact values are always strings "p/q".
Json to_json(const Rational& x);
Json to_json(const GaussianRational& z);            // {"re": "p/q", "im": "p/q"}
Json to_json(const LForm& f);                        // {"1": {...}, "Z3": {...}, ...}
Json to_json(const RationalMatrix& m);               // array of rows
Json to_json(const std::vector<Rational>& v);
Json to_json(const HomogPoly& p);                    // coefficient of X^n Y^{w-n} at index n
Json to_json(const LSeries& s);
Json to_json(const VerifyReport& r);
Json to_json(const RelationVector& v);
Json to_json(const NumericTValue& t);
Json to_json(const DetOrd2Report& r);

Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);
LForm lform_from_json(const Json& j);

/// Compact text for CSV cells: "a+bi" parts as p/q, generators joined with "+".
std::string csv_cell(const LForm& f);
std::string csv_cell(const GaussianRational& z);

}  // namespace eis4
