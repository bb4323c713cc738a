#pragma once

#include <string>

#include <json.hpp>

#include "lsx/bival.hpp"
#include "lsx/classify.hpp"
#include "lsx/gallery.hpp"
#include "lsx/propcheck.hpp"

namespace lsx {

/// Reports use a fixed field order so byte-identical runs stay byte-identical
/// (apart from the timing field).
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "lsx-report/1";

Json report_skeleton(const std::string& command);
void attach_timing(Json& report, double elapsed_ms);

Json json_of_structure(const LogicalStructure& s, const std::string& name);
Json json_of_witness(const Witness& w);
Json json_of_classification(const ClassificationReport& r);
Json json_of_compare(const CompareReport& r);
Json json_of_named_valuations(const NamedBivaluationSet& v);
Json json_of_registry(const RegistryReport& r);
Json json_of_claims(const gallery::ClaimReport& r);

}  // namespace lsx
