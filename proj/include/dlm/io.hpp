#pragma once

#include "json.hpp"

#include <filesystem>
#include <string>

#include "dlm/model.hpp"
#include "dlm/parser.hpp"

namespace dlm {

/// Model document:
///   {"agents": [..], "props": [..], "worlds": [..],
///    "relations": {"a": [["w","v"], ..]},
///    "valuation": {"w": ["p", "obs(a,p)", ..]}, "point": "w"}
/// Throws StructureError on dangling references or malformed documents and
/// ParseError on malformed atoms.
PointedModel model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const PointedModel& pm);

/// Action document:
///   {"events": [..], "relations": {"a": [["e","f"], ..]},
///    "pre": {"e": "<formula>"}, "post": {"e": {"obs(b,p)": true}}, "point": "e"}
/// Preconditions are parsed over `sig`. The label becomes "@<name>".
PointedAction action_from_json(const nlohmann::json& doc, const Signature& sig, const std::string& name,
                               const ActionRegistry& actions = {});
nlohmann::json action_to_json(const PointedAction& pa, const Signature& sig);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

PointedModel load_model(const std::filesystem::path& path);
void save_model(const std::filesystem::path& path, const PointedModel& pm);

}  // namespace dlm
