// Copyright 2026 The qpass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <regex>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace qpass_test {

using Json = nlohmann::json;

// Minimal JSON-Schema checker covering exactly the vocabulary the report
// schema uses: type, const, enum, required, properties, additionalProperties,
// items, pattern, minimum, oneOf, and local $ref. Enough to hold the CLI to
// the shipped schema file without pulling in a validator dependency.
class SchemaChecker {
 public:
  explicit SchemaChecker(const std::string& schema_path) {
    std::ifstream in(schema_path);
    if (!in) throw std::runtime_error("cannot open schema file: " + schema_path);
    in >> root_;
  }

  bool validate(const Json& value, std::string* error) const {
    return check(root_, value, "$", error);
  }

 private:
  const Json& resolve_ref(const std::string& ref) const {
    if (ref.rfind("#/", 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
    const Json* node = &root_;
    std::size_t begin = 2;
    while (begin < ref.size()) {
      const std::size_t end = ref.find('/', begin);
      const std::string token = ref.substr(begin, end == std::string::npos ? end : end - begin);
      node = &node->at(token);
      if (end == std::string::npos) break;
      begin = end + 1;
    }
    return *node;
  }

  static bool type_matches(const std::string& type, const Json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "null") return value.is_null();
    throw std::runtime_error("unsupported type keyword: " + type);
  }

  static bool fail(std::string* error, const std::string& path, const std::string& message) {
    if (error != nullptr && error->empty()) *error = path + ": " + message;
    return false;
  }

  bool check(const Json& schema, const Json& value, const std::string& path,
             std::string* error) const {
    if (schema.contains("$ref")) {
      return check(resolve_ref(schema.at("$ref").get<std::string>()), value, path, error);
    }
    if (schema.contains("const") && value != schema.at("const")) {
      return fail(error, path, "expected const " + schema.at("const").dump());
    }
    if (schema.contains("enum")) {
      bool found = false;
      for (const Json& candidate : schema.at("enum")) found = found || candidate == value;
      if (!found) return fail(error, path, "not in enum " + schema.at("enum").dump());
    }
    if (schema.contains("type") && !type_matches(schema.at("type").get<std::string>(), value)) {
      return fail(error, path, "expected type " + schema.at("type").get<std::string>());
    }
    if (schema.contains("pattern") && value.is_string()) {
      const std::regex pattern(schema.at("pattern").get<std::string>());
      if (!std::regex_search(value.get<std::string>(), pattern)) {
        return fail(error, path, "does not match pattern " + schema.at("pattern").get<std::string>());
      }
    }
    if (schema.contains("minimum") && value.is_number()) {
      if (value.get<double>() < schema.at("minimum").get<double>()) {
        return fail(error, path, "below minimum");
      }
    }
    if (schema.contains("required") && value.is_object()) {
      for (const Json& key : schema.at("required")) {
        if (!value.contains(key.get<std::string>())) {
          return fail(error, path, "missing required key " + key.get<std::string>());
        }
      }
    }
    if (value.is_object()) {
      const Json* properties = schema.contains("properties") ? &schema.at("properties") : nullptr;
      for (const auto& [key, child] : value.items()) {
        if (properties != nullptr && properties->contains(key)) {
          if (!check(properties->at(key), child, path + "." + key, error)) return false;
        } else if (schema.contains("additionalProperties")) {
          if (!check(schema.at("additionalProperties"), child, path + "." + key, error)) {
            return false;
          }
        }
      }
    }
    if (schema.contains("items") && value.is_array()) {
      std::size_t index = 0;
      for (const Json& child : value) {
        if (!check(schema.at("items"), child, path + "[" + std::to_string(index) + "]", error)) {
          return false;
        }
        ++index;
      }
    }
    if (schema.contains("oneOf")) {
      int matches = 0;
      for (const Json& arm : schema.at("oneOf")) {
        std::string scratch;
        if (check(arm, value, path, &scratch)) ++matches;
      }
      if (matches != 1) {
        return fail(error, path,
                    "matched " + std::to_string(matches) + " oneOf arms instead of exactly 1");
      }
    }
    return true;
  }

  Json root_;
};

}  // namespace qpass_test
