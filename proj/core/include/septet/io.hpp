#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "septet/atlas.hpp"
#include "septet/classifier.hpp"
#include "septet/deformation.hpp"
#include "septet/error.hpp"

namespace septet::io {

using Json = nlohmann::ordered_json;

/// {"points": [["x", "y", "z"], ...], "labels": [...]} where coordinates are
/// rational strings ("p/q", integers, exact decimals) or JSON integers.
struct ConfigFile {
  Configuration configuration;
  std::optional<std::vector<std::string>> labels;
};

/// Throws Error{ParseError} for malformed documents, Error{InvalidArgument}
/// for repeated points or a bad point count.
ConfigFile parse_config(const Json& doc);
ConfigFile parse_config_text(std::string_view text);

Json to_json(const Configuration& c);
Json to_json(const ConfigFile& file);
Json to_json(const ClassReport& report);
Json to_json(const WallEvent& event);
Json to_json(const Seed& seed);
Json to_json(const CensusReport& report);
/// {"error": {"kind": ..., "detail": ...}}
Json to_json(const Error& error);

/// Seed file: {"name", "provenance", "points", "fingerprint" | "delta"}.
Seed parse_seed(std::string slug, std::string_view text);

/// Pretty-printed document with a trailing newline; shared by CLI and service.
std::string dump(const Json& doc);

}  // namespace septet::io
