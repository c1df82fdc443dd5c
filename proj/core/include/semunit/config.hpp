#pragma once

#include "semunit/iri.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semunit {

/// Settings for the command-line tool: where gupris are minted, which
/// prefixes to register, the framework stamped on new units, and schema
/// fragment files loaded into every store.
struct CliConfig {
  std::string gupri_base = "https://kg.example/su/";
  PrefixMap prefixes;
  std::optional<std::string> default_framework;
  std::vector<std::string> schema_files;
};

/// Parse a JSON config document. Raises ConfigError on malformed input.
CliConfig parse_config(const std::string& json_text);

/// Load the effective config: the explicit path when given, otherwise the
/// file named by SEMUNIT_CONFIG, otherwise built-in defaults.
CliConfig load_config(const std::optional<std::string>& explicit_path);

} // namespace semunit
