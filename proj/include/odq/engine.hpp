#pragma once

// Quality measuring: evaluates records against a data object class, builds
// the error protocol and the per-field error statistics.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "odq/dataset.hpp"
#include "odq/spec.hpp"

namespace odq {

struct Violation {
  std::string object_name;
  std::size_t row_index = 0;
  std::string field_name;  // empty for record rules
  std::string rule_name;
  Severity severity = Severity::error;
  std::string observed;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// (row, field, rule) ordering used by the protocol.
bool protocol_less(const Violation& a, const Violation& b);

struct ErrorProtocol {
  std::vector<Violation> violations;

  bool operator==(const ErrorProtocol&) const = default;
};

struct RuleCount {
  std::size_t count = 0;
  double rate_pct = 0.0;
  Severity severity = Severity::error;

  bool operator==(const RuleCount&) const = default;
};

struct FieldReport {
  std::string field_name;
  std::string requirement;
  std::size_t records_total = 0;
  std::size_t records_with_error = 0;  // distinct records, error severity only
  double error_rate_pct = 0.0;
  std::map<std::string, RuleCount> breakdown;  // rules with at least one hit
  std::size_t null_count = 0;
  std::size_t placeholder_count = 0;
  std::map<std::string, std::size_t> placeholder_values;

  bool operator==(const FieldReport&) const = default;
};

struct RuleReport {
  std::string rule_name;
  Severity severity = Severity::error;
  std::size_t violations = 0;
  double rate_pct = 0.0;

  bool operator==(const RuleReport&) const = default;
};

struct CollectionOutcome {
  std::string rule_name;
  Metric metric = Metric::error_rate;
  std::string target;
  CompareOp op = CompareOp::le;
  double metric_value = 0.0;
  double threshold = 0.0;
  bool passed = true;

  bool operator==(const CollectionOutcome&) const = default;
};

struct Anomaly {
  std::string field_name;
  std::string value;
  std::size_t count = 0;

  bool operator==(const Anomaly&) const = default;
};

struct EvaluationResult {
  std::string object_name;
  std::size_t records_total = 0;
  ErrorProtocol protocol;
  std::vector<FieldReport> field_reports;  // spec field order
  std::vector<RuleReport> rule_reports;    // spec rule order
  std::vector<CollectionOutcome> collection_outcomes;
  std::vector<Anomaly> anomalies;

  bool operator==(const EvaluationResult&) const = default;
};

class BindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvaluateOptions {
  int workers = 0;                        // 0 = OpenMP default
  std::optional<std::size_t> anomaly_k;  // frequency scan over every field
};

/// Object class resolved against a dataset header. Construction throws
/// BindingError when a spec field has no column.
class CompiledObject {
 public:
  CompiledObject(const DataObjectClass& object, const std::vector<std::string>& header);
  ~CompiledObject();
  CompiledObject(CompiledObject&&) noexcept;
  CompiledObject& operator=(CompiledObject&&) noexcept;

  const DataObjectClass& object() const;

  /// Appends this record's violations (unsorted) to `out`.
  void evaluate(const RecordView& record, std::vector<Violation>& out) const;

  struct Impl;
  const Impl& impl() const { return *impl_; }

 private:
  std::unique_ptr<Impl> impl_;
};

/// Violations of one record in protocol order.
std::vector<Violation> evaluate_record(const RecordView& record, const DataObjectClass& object,
                                       const std::vector<std::string>& header);

/// OpenMP evaluation over disjoint record ranges. Output does not depend on
/// the worker count.
EvaluationResult evaluate_dataset(const Dataset& dataset, const DataObjectClass& object,
                                  const EvaluateOptions& options = {});

/// Single-threaded reference implementation.
EvaluationResult evaluate_dataset_serial(const Dataset& dataset, const DataObjectClass& object,
                                         const EvaluateOptions& options = {});

/// 100 * error_count / total, or 0 when total is 0.
double error_rate(std::size_t error_count, std::size_t total);

/// Display form of a rate: 2 decimals half-up, 4 decimals below 0.01, "0" for
/// zero. No percent sign.
std::string format_rate(std::size_t error_count, std::size_t total);

/// Distinct non-null values of `field` occurring at most k times, ordered by
/// (count, value).
std::vector<Anomaly> frequency_anomalies(const Dataset& dataset, std::string_view field, std::size_t k = 3);

struct AffectedColumns {
  std::size_t count = 0;
  std::size_t total = 0;
  double fraction_pct = 0.0;  // rounded half-up to one decimal

  bool operator==(const AffectedColumns&) const = default;
};

AffectedColumns affected_columns(const std::vector<FieldReport>& reports);

/// True iff `lhs op rhs`.
bool compare_values(double lhs, CompareOp op, double rhs);

/// JSON Lines with keys object,row,field,rule,severity,value,message.
std::string protocol_to_jsonl(const ErrorProtocol& protocol);
/// CSV with the same columns and a header row.
std::string protocol_to_csv(const ErrorProtocol& protocol);

}  // namespace odq
