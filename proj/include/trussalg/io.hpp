#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "trussalg/affine.hpp"
#include "trussalg/cohomology.hpp"
#include "trussalg/enumerate.hpp"
#include "trussalg/nijenhuis.hpp"
#include "trussalg/truss.hpp"

namespace trussalg {

// Input files are JSON. A truss file is either a finite table
//   { "name": string?, "group": [int,...], "mult": [int,...] }  (row-major)
// or an integer-truss parameter file { "a": int, "b": int, "c": int }.
// Throws StructuralError on missing files or malformed JSON.
nlohmann::json load_json_file(const std::string& path);

using TrussInput = std::variant<FiniteTruss, ZTrussParams>;
TrussInput read_truss_json(const nlohmann::json& j);
TrussInput read_truss_file(const std::string& path);

// A map file is { "table": [int,...] } or { "p": int, "q": int }.
using MapInput = std::variant<FnTable, AffineIntMap>;
MapInput read_map_json(const nlohmann::json& j);
MapInput read_map_file(const std::string& path);

Cochain read_cochain_json(const FiniteTruss& T, const nlohmann::json& j);

nlohmann::json truss_to_json(const FiniteTruss& T);
nlohmann::json to_json(const IsoClassReport& r);
nlohmann::json to_json(const CohomologyReport& r);
nlohmann::json to_json(const NijenhuisReport& r);
nlohmann::json to_json(const ClassifyZReport& r);
nlohmann::json to_json(const AffineVerifyReport& r);

// Writes the bundled example inputs used by the acceptance suite.
// Returns the file names written.
std::vector<std::string> emit_examples(const std::string& directory);

}  // namespace trussalg
