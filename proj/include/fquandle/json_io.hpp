#pragma once

#include <string>

#include "json.hpp"

#include "fquandle/classify.hpp"
#include "fquandle/cohomology.hpp"
#include "fquandle/core.hpp"
#include "fquandle/envelope.hpp"
#include "fquandle/extensions.hpp"
#include "fquandle/morphisms.hpp"

namespace fq {

/// FTable interchange schema: {"order": n, "table": [[...],...],
/// "one_based": false}.  Readers accept "one_based": true and normalize;
/// writers always emit 0-based tables.
nlohmann::json ftable_to_json(const FTable& t);
FTable ftable_from_json(const nlohmann::json& j);

nlohmann::json morphism_to_json(const Morphism& m, bool is_automorphism);

nlohmann::json axiom_report_to_json(const AxiomReport& r);

nlohmann::json catalog_to_json(const Catalog& c);
std::string catalog_to_csv(const Catalog& c);

nlohmann::json presentation_to_json(const Presentation& p);

nlohmann::json cohomology_result_to_json(const CohomologyResult& r);

nlohmann::json dynamical_cocycle_to_json(const DynamicalCocycle& c);
DynamicalCocycle dynamical_cocycle_from_json(const nlohmann::json& j);

nlohmann::json module_data_to_json(const ModuleData& m);
ModuleData module_data_from_json(const nlohmann::json& j);

GroupTable group_from_json(const nlohmann::json& j);

/// Reads and parses a JSON file; throws input_error on I/O or parse errors.
nlohmann::json load_json_file(const std::string& path);

}  // namespace fq
