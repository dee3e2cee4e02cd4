#pragma once

// In-memory model of a quality specification: data object classes, their
// fields and the checks, record rules and collection rules attached to them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace odq {

/// Position in a `.dq` source. Columns count bytes; both are 1-based.
///
/// Locations never take part in structural equality: two ASTs that differ only
/// in where they were parsed from compare equal.
struct SourceLoc {
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

enum class Severity { error, warning, anomaly };

std::string_view to_string(Severity s);
std::optional<Severity> parse_severity(std::string_view s);

/// Ordering used for `--fail-on`: error is the most severe.
constexpr int severity_rank(Severity s) {
  switch (s) {
    case Severity::error: return 2;
    case Severity::warning: return 1;
    case Severity::anomaly: return 0;
  }
  return 0;
}

enum class Nullability { not_null, nullable };

enum class BaseType { text, integer, decimal, date };

struct FieldType {
  BaseType base = BaseType::text;
  std::string date_format;  // only for BaseType::date

  bool operator==(const FieldType&) const = default;
};

enum class CompareOp { eq, ne, lt, le, gt, ge };

std::string_view to_string(CompareOp op);

enum class PredicateKind {
  present,
  matches,
  digits,
  length,
  starts_with,
  in_set,
  date_valid,
  year_between,
  is_integer,
  is_decimal,
};

std::string_view to_string(PredicateKind k);
std::optional<PredicateKind> parse_predicate(std::string_view name);

/// Literal operand: string, integer or decimal.
using Literal = std::variant<std::string, std::int64_t, double>;

enum class ExprKind { and_, or_, not_, implies, compare, predicate, field_ref, literal };

/// One node of a check expression.
///
/// Connectives and comparisons keep their operands in `children`. Predicate
/// calls keep the checked field in `field` and the remaining arguments in
/// `args` (for `in_set`, the set members). `nocase` only applies to `matches`.
struct CheckExpr {
  ExprKind kind = ExprKind::literal;
  CompareOp op = CompareOp::eq;
  PredicateKind predicate = PredicateKind::present;
  std::string field;
  Literal literal;
  std::vector<Literal> args;
  bool nocase = false;
  std::vector<CheckExpr> children;
  SourceLoc loc;

  bool operator==(const CheckExpr&) const = default;

  bool is_boolean() const {
    return kind != ExprKind::field_ref && kind != ExprKind::literal;
  }
};

struct NamedCheck {
  std::string name;
  CheckExpr expr;
  std::optional<Severity> severity;  // falls back to the field default
  SourceLoc loc;

  bool operator==(const NamedCheck&) const = default;
};

struct FieldSpec {
  std::string name;
  FieldType type;
  Nullability nullability = Nullability::nullable;
  std::vector<NamedCheck> checks;
  std::optional<std::vector<std::string>> placeholder_tokens;
  Severity severity_default = Severity::error;
  SourceLoc loc;

  bool operator==(const FieldSpec&) const = default;

  Severity severity_of(const NamedCheck& c) const { return c.severity.value_or(severity_default); }
};

struct RecordRule {
  std::string name;
  CheckExpr expr;
  Severity severity = Severity::error;
  SourceLoc loc;

  bool operator==(const RecordRule&) const = default;
};

enum class Metric { error_rate, null_rate, frequency_min };

std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view s);

constexpr bool is_rate_metric(Metric m) { return m != Metric::frequency_min; }

struct CollectionRule {
  std::string name;
  Metric metric = Metric::error_rate;
  std::string target;  // field name, or record-rule name for error_rate
  CompareOp op = CompareOp::le;
  double threshold = 0.0;
  SourceLoc loc;

  bool operator==(const CollectionRule&) const = default;
};

struct DataObjectClass {
  std::string name;
  std::string source_hint;
  std::vector<FieldSpec> fields;
  std::vector<RecordRule> record_rules;
  std::vector<CollectionRule> collection_rules;
  SourceLoc loc;

  bool operator==(const DataObjectClass&) const = default;

  const FieldSpec* find_field(std::string_view n) const;
  const RecordRule* find_rule(std::string_view n) const;
};

struct QualitySpec {
  int version = 1;
  std::vector<DataObjectClass> objects;

  bool operator==(const QualitySpec&) const = default;

  const DataObjectClass* find_object(std::string_view n) const;
};

/// Default placeholder tokens flagged as "value means absent".
const std::vector<std::string>& default_placeholder_tokens();

/// Implicit rule names produced by the engine; user checks may not use them.
inline constexpr std::string_view kNotNullRule = "not_null";
inline constexpr std::string_view kTypeRule = "type";
inline constexpr std::string_view kPlaceholderRule = "placeholder";
inline constexpr std::string_view kFrequencyRule = "frequency";

bool is_reserved_rule_name(std::string_view n);

/// Compact single-line requirement text, e.g. "Int, 11 digits, NOT NULL".
std::string requirement_summary(const FieldSpec& f);

}  // namespace odq
