// Minimal JSON-Schema subset checker for the shipped schemas: supports type,
// properties, required, items, enum, minimum, maximum and local $ref into
// $defs. Enough to verify the CLI's outputs against the published files.
#ifndef QOT_TESTS_SCHEMA_CHECK_HPP
#define QOT_TESTS_SCHEMA_CHECK_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "null") return value.is_null();
  return false;
}

inline void check(const json& value, const json& schema, const json& root,
                  const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) == 0) {
      check(value, root["$defs"][ref.substr(prefix.size())], root, path, errors);
    } else {
      errors.push_back(path + ": unsupported $ref " + ref);
    }
    return;
  }
  if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>())) {
    errors.push_back(path + ": expected type " + schema["type"].get<std::string>());
    return;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& allowed : schema["enum"])
      if (value == allowed) found = true;
    if (!found) errors.push_back(path + ": value not in enum");
  }
  if (schema.contains("minimum") && value.is_number() &&
      value.get<double>() < schema["minimum"].get<double>())
    errors.push_back(path + ": below minimum");
  if (schema.contains("maximum") && value.is_number() &&
      value.get<double>() > schema["maximum"].get<double>())
    errors.push_back(path + ": above maximum");
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          errors.push_back(path + ": missing required key " + key.get<std::string>());
    if (schema.contains("properties"))
      for (const auto& [key, sub] : schema["properties"].items())
        if (value.contains(key)) check(value[key], sub, root, path + "/" + key, errors);
  }
  if (value.is_array() && schema.contains("items"))
    for (std::size_t i = 0; i < value.size(); ++i)
      check(value[i], schema["items"], root, path + "[" + std::to_string(i) + "]", errors);
}

inline std::vector<std::string> validate(const json& value, const json& schema) {
  std::vector<std::string> errors;
  check(value, schema, schema, "", errors);
  return errors;
}

}  // namespace schema_check

#endif
