#pragma once

#include <string>

#include "json.hpp"
#include "quatkit/fueter.hpp"
#include "quatkit/slice.hpp"
#include "quatkit/structure.hpp"

namespace quatkit::io {

using json = nlohmann::json;

/// {"w":..., "x":..., "y":..., "z":...}; rationals render as "n" / "n/d"
/// strings, floats as JSON numbers.
json quaternion_to_json(const Quaternion& q);

json scalar_to_json(const Scalar& s);

/// {"dim":n, "basis":[names], "table":[[[coeffs]]]} with coefficients as
/// rational strings.
json table_to_json(const structure::StructureTable& table);
structure::StructureTable table_from_json(const json& j);

json report_to_json(const structure::ContradictionReport& report);
json division_to_json(const structure::DivisionCheckResult& result,
                      const structure::StructureTable& table, const std::string& table_name);

/// {"mode":..., "method":..., "verdict":..., "tolerance":..., "residuals":
/// [{"point":..., "residual":..., "norm":..., "slice":{...}?}],
/// "symbolic_result": string|null, "caveat": string?}
json regularity_to_json(const fueter::RegularityReport& report);

json series_to_json(const slice::SeriesResult& result);

} // namespace quatkit::io
