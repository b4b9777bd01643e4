#pragma once

// JSON forms of the report payloads. Field names and layouts are documented
// in docs/json-schema.md; bump kReportSchemaVersion on any change.

#include <string>

#include <json.hpp>

#include "affgr/affine.hpp"
#include "affgr/classify.hpp"
#include "affgr/schubert.hpp"

namespace affgr {

inline constexpr int kReportSchemaVersion = 1;

/// {schema_version, command, type_label, convention_hash, payload}.
nlohmann::json make_envelope(const std::string& command, const std::string& type_label,
                             nlohmann::json payload);

void to_json(nlohmann::json& j, const LieType& t);
void from_json(const nlohmann::json& j, LieType& t);

void to_json(nlohmann::json& j, const GradedPoly& p);
void from_json(const nlohmann::json& j, GradedPoly& p);

void to_json(nlohmann::json& j, const PDStatus& s);
void from_json(const nlohmann::json& j, PDStatus& s);

void to_json(nlohmann::json& j, const TypeReport& r);
void from_json(const nlohmann::json& j, TypeReport& r);

/// Levels as lists of canonical element strings.
nlohmann::json levels_json(const AffineWeylGroup& G, const MinRepLevels& lv);
nlohmann::json generating_json(const AffineWeylGroup& G, const GeneratingReport& r);

}  // namespace affgr
