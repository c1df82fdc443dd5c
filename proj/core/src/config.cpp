#include "semunit/config.hpp"

#include "semunit/error.hpp"
#include "semunit/unit.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace semunit {

CliConfig parse_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    raise(Err::ConfigError, e.what());
  }
  try {
    CliConfig cfg;
    if (doc.contains("gupri_base"))
      cfg.gupri_base = doc.at("gupri_base").get<std::string>();
    for (const auto& [name, ns] : doc.value("prefixes", nlohmann::json::object()).items())
      cfg.prefixes[name] = ns.get<std::string>();
    if (doc.contains("default_framework")) {
      const std::string name = doc.at("default_framework").get<std::string>();
      if (!framework_from_name(name))
        raise(Err::ConfigError, fmt::format("unknown logic framework '{}'", name));
      cfg.default_framework = name;
    }
    for (const auto& f : doc.value("schema_files", nlohmann::json::array()))
      cfg.schema_files.push_back(f.get<std::string>());
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    raise(Err::ConfigError, e.what());
  }
}

CliConfig load_config(const std::optional<std::string>& explicit_path) {
  std::string path;
  if (explicit_path) {
    path = *explicit_path;
  } else if (const char* env = std::getenv("SEMUNIT_CONFIG"); env && *env) {
    path = env;
  } else {
    return {};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    raise(Err::ConfigError, fmt::format("cannot open config '{}'", path));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

} // namespace semunit
