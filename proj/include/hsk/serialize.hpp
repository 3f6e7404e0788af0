#pragma once

/// JSON and CSV interchange: polynomial fields, part descriptions, and the
/// verification reports. All output is deterministic for identical inputs.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "hsk/balance.hpp"
#include "hsk/fields.hpp"
#include "hsk/geometry.hpp"
#include "hsk/traction.hpp"

namespace hsk {

using json = nlohmann::json;

// Fields: {"rank": r, "terms": [{"exp": [a,b,c], "coef": [..3^r values..]}]}.
// Rank-2 coefficients are row-major; rank-3 coefficients run i-major then
// j then k. A rank-3 field read as a hyperstress must satisfy the
// right-pair symmetry within Tolerances::packing.
json to_json(const FieldVariant& f);
json to_json(const ScalarField& f);
json to_json(const VectorField& f);
json to_json(const Tensor2Field& f);
json to_json(const Tensor3Field& f);
json to_json(const HyperstressField& f);

FieldVariant field_from_json(const json& j);
VectorField vector_field_from_json(const json& j);
Tensor2Field tensor2_field_from_json(const json& j);
HyperstressField hyperstress_field_from_json(const json& j);

// Parts: {"vertices": [[x,y,z],...], "faces": [[i0,i1,...],...]} with
// counterclockwise outward loops.
json to_json(const PartSpec& spec);
PartSpec part_spec_from_json(const json& j);

/// Loads and fully validates a part file; the part id is the file stem.
/// Parse errors are reported with file, line and column.
PolyhedralPart load_part(const std::filesystem::path& path);

/// Parses a document, rethrowing parse errors with file/line/column info.
json parse_json_file(const std::filesystem::path& path);

json to_json(const BalanceReport& report);
json to_json(const TractionSample& sample);
json to_json(const EdgeForceSample& sample);

/// One CSV row per verification; pairs with balance_csv_header().
std::string balance_csv_header();
std::string balance_csv_row(const BalanceReport& report);

/// Shortest-roundtrip-stable formatting used in all CSV output.
std::string format_double(double v);

}  // namespace hsk
