#pragma once

// Validator for the JSON-Schema subset the run config uses:
// type (string or list), properties, required, additionalProperties (bool),
// enum, minimum, maximum, exclusiveMinimum, items, minItems, maxItems, $ref
// to "#/definitions/<name>".

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace entropic::cli {

using nlohmann::json;

class SchemaValidator {
 public:
  explicit SchemaValidator(json schema) : root_(std::move(schema)) {}

  // Empty when valid; otherwise one message per violation, prefixed by the JSON path.
  std::vector<std::string> validate(const json& instance) const {
    std::vector<std::string> errors;
    check(root_, instance, "$", errors);
    return errors;
  }

 private:
  json root_;

  const json& resolve(const json& schema) const {
    if (!schema.contains("$ref")) return schema;
    const std::string ref = schema.at("$ref").get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::logic_error("schema: unsupported $ref " + ref);
    return resolve(root_.at("definitions").at(ref.substr(prefix.size())));
  }

  static bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "null") return v.is_null();
    throw std::logic_error("schema: unknown type " + t);
  }

  void check(const json& raw_schema, const json& v, const std::string& path, std::vector<std::string>& errors) const {
    const json& s = resolve(raw_schema);

    if (s.contains("type")) {
      const json& t = s.at("type");
      bool ok = false;
      if (t.is_string()) {
        ok = has_type(v, t.get<std::string>());
      } else {
        for (const auto& one : t) ok = ok || has_type(v, one.get<std::string>());
      }
      if (!ok) {
        errors.push_back(path + ": expected type " + t.dump() + ", got " + v.type_name());
        return;
      }
    }

    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s.at("enum")) found = found || e == v;
      if (!found) errors.push_back(path + ": value " + v.dump() + " not in " + s.at("enum").dump());
    }

    if (v.is_number()) {
      const double x = v.get<double>();
      if (s.contains("minimum") && x < s.at("minimum").get<double>())
        errors.push_back(path + ": " + v.dump() + " is below the minimum " + s.at("minimum").dump());
      if (s.contains("maximum") && x > s.at("maximum").get<double>())
        errors.push_back(path + ": " + v.dump() + " is above the maximum " + s.at("maximum").dump());
      if (s.contains("exclusiveMinimum") && x <= s.at("exclusiveMinimum").get<double>())
        errors.push_back(path + ": " + v.dump() + " must be > " + s.at("exclusiveMinimum").dump());
    }

    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s.at("minItems").get<std::size_t>())
        errors.push_back(path + ": needs at least " + s.at("minItems").dump() + " items");
      if (s.contains("maxItems") && v.size() > s.at("maxItems").get<std::size_t>())
        errors.push_back(path + ": allows at most " + s.at("maxItems").dump() + " items");
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) check(s.at("items"), v[i], path + "[" + std::to_string(i) + "]", errors);
      }
    }

    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& key : s.at("required")) {
          if (!v.contains(key.get<std::string>()))
            errors.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
        }
      }
      const json empty = json::object();
      const json& props = s.contains("properties") ? s.at("properties") : empty;
      const bool closed = s.contains("additionalProperties") && s.at("additionalProperties") == false;
      for (const auto& [key, value] : v.items()) {
        if (props.contains(key)) {
          check(props.at(key), value, path + "." + key, errors);
        } else if (closed) {
          errors.push_back(path + ": unknown key '" + key + "'");
        }
      }
    }
  }
};

}  // namespace entropic::cli
