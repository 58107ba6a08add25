#pragma once

// Validator for the JSON Schema keywords the report schema uses: type, const,
// enum, required, properties, additionalProperties, items, minimum, anyOf and
// local $ref. Unknown keywords are ignored.

#include <string>
#include <vector>

#include "json.hpp"

namespace testing {

class SchemaCheck {
 public:
  explicit SchemaCheck(nlohmann::json root) : root_(std::move(root)) {}

  /// Empty when the instance is valid; otherwise one entry per failure.
  std::vector<std::string> errors(const nlohmann::json& instance) const {
    std::vector<std::string> out;
    check(root_, instance, "$", out);
    return out;
  }

 private:
  static bool has_type(const nlohmann::json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  const nlohmann::json& deref(const std::string& ref) const {
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
    return root_.at("$defs").at(ref.substr(prefix.size()));
  }

  void check(const nlohmann::json& s, const nlohmann::json& v, const std::string& at,
             std::vector<std::string>& out) const {
    if (s.contains("$ref")) return check(deref(s["$ref"]), v, at, out);
    if (s.contains("type") && !has_type(v, s["type"])) {
      out.push_back(at + ": expected " + s["type"].get<std::string>());
      return;
    }
    if (s.contains("const") && v != s["const"]) out.push_back(at + ": not the constant " + s["const"].dump());
    if (s.contains("enum")) {
      bool hit = false;
      for (const auto& e : s["enum"]) hit = hit || e == v;
      if (!hit) out.push_back(at + ": " + v.dump() + " not in enum");
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
      out.push_back(at + ": below minimum");
    if (s.contains("anyOf")) {
      bool any = false;
      for (const auto& alt : s["anyOf"]) {
        std::vector<std::string> sub;
        check(alt, v, at, sub);
        any = any || sub.empty();
      }
      if (!any) out.push_back(at + ": matches no alternative");
    }
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& k : s["required"])
          if (!v.contains(k.get<std::string>())) out.push_back(at + ": missing " + k.get<std::string>());
      const auto props = s.value("properties", nlohmann::json::object());
      for (const auto& [k, child] : v.items()) {
        if (props.contains(k))
          check(props[k], child, at + "." + k, out);
        else if (s.value("additionalProperties", true) == false)
          out.push_back(at + ": unexpected key " + k);
      }
    }
    if (v.is_array() && s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], at + "[" + std::to_string(i) + "]", out);
  }

  nlohmann::json root_;
};

}  // namespace testing
