#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "zariski/lattice.hpp"

namespace zariski {

/// In-memory form of a configuration file: the dual graph, the divisor D and
/// an optional user G.
struct ConfigDocument {
  ResolutionConfig config;
  QDivisor divisor;
  std::optional<QDivisor> g;

  friend bool operator==(const ConfigDocument&, const ConfigDocument&) = default;
};

/// Strict-schema parse. Unknown keys, wrong types and malformed rationals
/// throw Error(ErrorKind::Parse) naming the offending key.
ConfigDocument parse_config(const nlohmann::json& doc);
ConfigDocument parse_config_text(const std::string& text);
ConfigDocument load_config(const std::filesystem::path& path);

/// Canonical serialization; parse_config(emit_config(x)) == x.
nlohmann::json emit_config(const ConfigDocument& doc);

/// label -> value, where each value is a rational string or a JSON integer.
QDivisor parse_divisor(const nlohmann::json& node, const std::string& where);

/// label -> reduced rational string.
nlohmann::json divisor_json(const QDivisor& d);

/// A G file holds either a bare label -> integer object or a document with
/// a "G" object (a full configuration file is accepted).
QDivisor load_g_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace zariski
