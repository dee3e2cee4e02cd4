#include "odq/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "odq/dataset.hpp"

namespace odq {

SummaryReport make_summary(const EvaluationResult& r) {
  SummaryReport s;
  s.object_name = r.object_name;
  s.records_total = r.records_total;
  s.field_reports = r.field_reports;
  s.rule_reports = r.rule_reports;
  s.collection_outcomes = r.collection_outcomes;
  s.affected = affected_columns(r.field_reports);
  s.anomalies = r.anomalies;
  return s;
}

namespace {

std::string describe_rule(const std::string& rule, const RuleCount& rc) {
  std::string n = std::to_string(rc.count);
  const char* plural = rc.count == 1 ? "" : "s";
  std::string s;
  if (rule == kNotNullRule) {
    s = n + " NULL value" + plural;
  } else if (rule == kPlaceholderRule) {
    s = n + " placeholder value" + plural;
  } else if (rule == kTypeRule) {
    s = n + " type error" + plural;
  } else if (rc.severity == Severity::anomaly) {
    s = n + " rare value" + plural + " (" + rule + ")";
  } else {
    s = n + " failed " + rule;
  }
  if (rc.severity != Severity::error && rc.severity != Severity::anomaly) s += " (" + std::string(to_string(rc.severity)) + ")";
  return s;
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n' || c == '\r') {
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string threshold_text(const CollectionOutcome& o) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", o.threshold);
  return std::string(buf) + (is_rate_metric(o.metric) ? "%" : "");
}

std::string value_text(const CollectionOutcome& o) {
  char buf[64];
  if (is_rate_metric(o.metric)) {
    std::snprintf(buf, sizeof buf, "%.4f%%", o.metric_value);
  } else {
    std::snprintf(buf, sizeof buf, "%.0f", o.metric_value);
  }
  return buf;
}

std::string breakdown_text(const FieldReport& f) {
  std::string out;
  for (const auto& [rule, rc] : f.breakdown) {
    if (!out.empty()) out += ";";
    out += rule + "=" + std::to_string(rc.count);
  }
  return out;
}

}  // namespace

std::string field_comment(const FieldReport& f) {
  if (f.breakdown.empty()) return "-";
  if (f.breakdown.size() == 1 && f.breakdown.begin()->first == kNotNullRule) return "NULL values";
  std::string out;
  auto nn = f.breakdown.find(std::string(kNotNullRule));
  for (const auto& [rule, rc] : f.breakdown) {
    if (rule == kNotNullRule) continue;
    if (!out.empty()) out += "; ";
    out += describe_rule(rule, rc);
  }
  if (nn != f.breakdown.end()) out += "; " + describe_rule(nn->first, nn->second);
  return out;
}

std::string affected_line(const AffectedColumns& a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", a.fraction_pct);
  return std::to_string(a.count) + " of " + std::to_string(a.total) + " columns (" + buf + "%) affected";
}

std::string render_markdown(const SummaryReport& r, const QualitySpec& spec) {
  const DataObjectClass* obj = spec.find_object(r.object_name);
  std::string out = "## " + md_cell(r.object_name) + " (" + std::to_string(r.records_total) + " records)\n\n";
  out += "| Field | Requirement | Error count | Error rate | Comment |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& f : r.field_reports) {
    std::string requirement = f.requirement;
    if (obj) {
      if (const FieldSpec* fs = obj->find_field(f.field_name)) requirement = requirement_summary(*fs);
    }
    out += "| " + md_cell(f.field_name) + " | " + md_cell(requirement) + " | " + std::to_string(f.records_with_error) +
           " | " + format_rate(f.records_with_error, f.records_total) + "% | " + md_cell(field_comment(f)) + " |\n";
  }
  out += "\n" + affected_line(r.affected) + "\n";
  for (const auto& rr : r.rule_reports) {
    out += "Rule " + md_cell(rr.rule_name) + ": " + std::to_string(rr.violations) + " violations (" +
           format_rate(rr.violations, r.records_total) + "%)";
    if (rr.severity != Severity::error) out += ", " + std::string(to_string(rr.severity));
    out += "\n";
  }
  for (const auto& o : r.collection_outcomes) {
    out += "Expectation " + md_cell(o.rule_name) + ": " + std::string(to_string(o.metric)) + "(" + md_cell(o.target) +
           ") " + std::string(to_string(o.op)) + " " + threshold_text(o) + " " + (o.passed ? "passed" : "FAILED") +
           " (observed " + value_text(o) + ")\n";
  }
  if (!r.anomalies.empty()) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_field;
    std::vector<std::string> order;
    for (const auto& a : r.anomalies) {
      auto [it, fresh] = per_field.try_emplace(a.field_name, 0, 0);
      if (fresh) order.push_back(a.field_name);
      ++it->second.first;
      it->second.second += a.count;
    }
    for (const auto& name : order) {
      const auto& [values, records] = per_field[name];
      out += "Rare values in " + md_cell(name) + ": " + std::to_string(values) + " values in " + std::to_string(records) +
             " records (" + format_rate(records, r.records_total) + "%)\n";
    }
  }
  return out;
}

std::string render_json(const SummaryReport& r) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["object"] = r.object_name;
  root["records_total"] = r.records_total;
  ordered_json fields = ordered_json::array();
  for (const auto& f : r.field_reports) {
    ordered_json j;
    j["field"] = f.field_name;
    j["requirement"] = f.requirement;
    j["records_total"] = f.records_total;
    j["error_count"] = f.records_with_error;
    j["error_rate_pct"] = f.error_rate_pct;
    j["error_rate_display"] = format_rate(f.records_with_error, f.records_total);
    j["null_count"] = f.null_count;
    j["placeholder_count"] = f.placeholder_count;
    ordered_json pv = ordered_json::object();
    for (const auto& [value, n] : f.placeholder_values) pv[value] = n;
    j["placeholder_values"] = std::move(pv);
    ordered_json b = ordered_json::array();
    for (const auto& [rule, rc] : f.breakdown) {
      b.push_back({{"rule", rule},
                   {"severity", std::string(to_string(rc.severity))},
                   {"count", rc.count},
                   {"rate_pct", rc.rate_pct},
                   {"rate_display", format_rate(rc.count, f.records_total)}});
    }
    j["breakdown"] = std::move(b);
    j["comment"] = field_comment(f);
    fields.push_back(std::move(j));
  }
  root["fields"] = std::move(fields);
  ordered_json rules = ordered_json::array();
  for (const auto& rr : r.rule_reports) {
    rules.push_back({{"rule", rr.rule_name},
                     {"severity", std::string(to_string(rr.severity))},
                     {"violations", rr.violations},
                     {"rate_pct", rr.rate_pct},
                     {"rate_display", format_rate(rr.violations, r.records_total)}});
  }
  root["rules"] = std::move(rules);
  ordered_json expectations = ordered_json::array();
  for (const auto& o : r.collection_outcomes) {
    expectations.push_back({{"rule", o.rule_name},
                            {"metric", std::string(to_string(o.metric))},
                            {"target", o.target},
                            {"op", std::string(to_string(o.op))},
                            {"threshold", o.threshold},
                            {"value", o.metric_value},
                            {"passed", o.passed}});
  }
  root["expectations"] = std::move(expectations);
  root["affected_columns"] = {{"count", r.affected.count}, {"total", r.affected.total}, {"fraction_pct", r.affected.fraction_pct}};
  ordered_json anomalies = ordered_json::array();
  for (const auto& a : r.anomalies) anomalies.push_back({{"field", a.field_name}, {"value", a.value}, {"count", a.count}});
  root["anomalies"] = std::move(anomalies);
  return root.dump(2) + "\n";
}

std::string render_csv(const SummaryReport& r) {
  std::string out;
  append_csv_row(out, {"field", "requirement", "error_count", "error_rate_pct", "null_count", "placeholder_count", "breakdown"});
  for (const auto& f : r.field_reports) {
    append_csv_row(out, {f.field_name, f.requirement, std::to_string(f.records_with_error),
                         format_rate(f.records_with_error, f.records_total), std::to_string(f.null_count),
                         std::to_string(f.placeholder_count), breakdown_text(f)});
  }
  return out;
}

}  // namespace odq
