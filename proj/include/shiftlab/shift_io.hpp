#pragma once

#include <string>

#include "json.hpp"
#include "shiftlab/isometry.hpp"
#include "shiftlab/oracle.hpp"
#include "shiftlab/spectral.hpp"
#include "shiftlab/theorems.hpp"
#include "shiftlab/weights.hpp"

namespace shiftlab {

/// Insertion-ordered JSON keeps serialization canonical, so parse-then-emit
/// round-trips are byte-identical.
using Json = nlohmann::ordered_json;

// Shift schema: {"family": "...", "params": {...}} with exact rationals as
// "p/q" strings, plus optional "phases" ([re, im] pairs) and "transforms"
// (provenance chain of {"kind": ..., "lambda"/"factor": ...} records, applied
// in order).
Json shift_to_json(const WeightedShift& shift);
WeightedShift shift_from_json(const Json& j);
std::string shift_to_string(const WeightedShift& shift);
WeightedShift shift_from_string(const std::string& text);

Json defect_report_to_json(const DefectReport& report, std::size_t value_cap = 128);

Json power_table_to_json(const PowerNormTable& table);
std::string power_table_to_csv(const PowerNormTable& table);  // header: n,norm,estimate

Json verdict_to_json(const TheoremVerdict& verdict);
std::string verdict_to_markdown(const TheoremVerdict& verdict);

Json matrix_to_json(const TruncatedMatrix& m);
TruncatedMatrix matrix_from_json(const Json& j);

}  // namespace shiftlab
