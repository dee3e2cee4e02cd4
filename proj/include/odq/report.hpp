#pragma once

// Summary tables in the shape "field | requirement | error count | error rate |
// comment", plus JSON and CSV exports.

#include <string>
#include <vector>

#include "odq/engine.hpp"
#include "odq/spec.hpp"

namespace odq {

struct SummaryReport {
  std::string object_name;
  std::size_t records_total = 0;
  std::vector<FieldReport> field_reports;
  std::vector<RuleReport> rule_reports;
  std::vector<CollectionOutcome> collection_outcomes;
  AffectedColumns affected;
  std::vector<Anomaly> anomalies;

  bool operator==(const SummaryReport&) const = default;
};

SummaryReport make_summary(const EvaluationResult& result);

/// Comment column: "NULL values" when nulls are the only problem, otherwise
/// the breakdown ("2 failed digits; 20496 NULL values"), "-" when clean.
std::string field_comment(const FieldReport& report);

/// Requirement texts are taken from the matching object in `spec` when present.
std::string render_markdown(const SummaryReport& report, const QualitySpec& spec);
std::string render_json(const SummaryReport& report);
std::string render_csv(const SummaryReport& report);

/// "25 of 36 columns (69.4%) affected"
std::string affected_line(const AffectedColumns& a);

}  // namespace odq
