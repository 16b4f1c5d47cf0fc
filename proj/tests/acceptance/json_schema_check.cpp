#include "json_schema_check.hpp"

#include <stdexcept>

using nlohmann::json;

namespace {

class Checker {
 public:
  explicit Checker(const json& root) : root_(root) {}

  void check(const json& v, const json& s, const std::string& at, std::vector<std::string>& errs) const {
    if (s.is_boolean()) {
      if (!s.get<bool>()) errs.push_back(at + ": schema forbids any value");
      return;
    }
    if (s.contains("$ref")) {
      check(v, resolve(s["$ref"].get<std::string>()), at, errs);
    }
    if (s.contains("type") && !type_ok(v, s["type"])) {
      errs.push_back(at + ": expected type " + s["type"].dump() + ", got " + v.type_name());
      return;
    }
    if (s.contains("const") && v != s["const"]) errs.push_back(at + ": expected " + s["const"].dump());
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || equal(v, e);
      if (!found) errs.push_back(at + ": " + v.dump() + " not in " + s["enum"].dump());
    }
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
      errs.push_back(at + ": below minimum " + s["minimum"].dump());
    }
    if (v.is_object()) {
      if (s.contains("required")) {
        for (const auto& k : s["required"]) {
          if (!v.contains(k.get<std::string>())) errs.push_back(at + ": missing '" + k.get<std::string>() + "'");
        }
      }
      const json props = s.value("properties", json::object());
      for (const auto& [k, sub] : props.items()) {
        if (v.contains(k)) check(v[k], sub, at + "." + k, errs);
      }
      if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
        for (const auto& [k, _] : v.items()) {
          if (!props.contains(k)) errs.push_back(at + ": unexpected property '" + k + "'");
        }
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) errs.push_back(at + ": too few items");
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) errs.push_back(at + ": too many items");
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], at + "[" + std::to_string(i) + "]", errs);
      }
    }
    if (s.contains("allOf")) {
      for (const auto& sub : s["allOf"]) check(v, sub, at, errs);
    }
    if (s.contains("anyOf")) {
      bool any = false;
      for (const auto& sub : s["anyOf"]) {
        std::vector<std::string> e;
        check(v, sub, at, e);
        any = any || e.empty();
      }
      if (!any) errs.push_back(at + ": matches no anyOf branch");
    }
    if (s.contains("if")) {
      std::vector<std::string> e;
      check(v, s["if"], at, e);
      if (e.empty() && s.contains("then")) check(v, s["then"], at, errs);
      if (!e.empty() && s.contains("else")) check(v, s["else"], at, errs);
    }
  }

 private:
  const json& resolve(const std::string& ref) const {
    if (ref.rfind("#/", 0) != 0) throw std::runtime_error("only local $ref supported: " + ref);
    return root_.at(json::json_pointer(ref.substr(1)));
  }

  static bool equal(const json& a, const json& b) {
    if (a.is_number() && b.is_number()) return a.get<double>() == b.get<double>();
    return a == b;
  }

  static bool type_is(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer() || (v.is_number_float() && v.get<double>() == static_cast<double>(static_cast<long long>(v.get<double>())));
    return false;
  }

  static bool type_ok(const json& v, const json& t) {
    if (t.is_string()) return type_is(v, t.get<std::string>());
    for (const auto& x : t) {
      if (type_is(v, x.get<std::string>())) return true;
    }
    return false;
  }

  const json& root_;
};

}  // namespace

std::vector<std::string> schema_errors(const json& instance, const json& schema) {
  std::vector<std::string> errs;
  Checker(schema).check(instance, schema, "$", errs);
  return errs;
}
