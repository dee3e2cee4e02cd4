#include <json.hpp>

#include "odq/engine.hpp"

namespace odq {

std::string protocol_to_jsonl(const ErrorProtocol& protocol) {
  std::string out;
  for (const auto& v : protocol.violations) {
    nlohmann::ordered_json j;
    j["object"] = v.object_name;
    j["row"] = v.row_index;
    j["field"] = v.field_name;
    j["rule"] = v.rule_name;
    j["severity"] = std::string(to_string(v.severity));
    j["value"] = v.observed;
    j["message"] = v.message;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string protocol_to_csv(const ErrorProtocol& protocol) {
  std::string out;
  append_csv_row(out, {"object", "row", "field", "rule", "severity", "value", "message"});
  for (const auto& v : protocol.violations) {
    append_csv_row(out, {v.object_name, std::to_string(v.row_index), v.field_name, v.rule_name,
                         std::string(to_string(v.severity)), v.observed, v.message});
  }
  return out;
}

}  // namespace odq
