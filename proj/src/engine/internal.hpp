#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "odq/checks.hpp"
#include "odq/engine.hpp"

namespace odq::engine {

enum class Tri : std::uint8_t { F, U, T };

inline Tri tri(bool b) { return b ? Tri::T : Tri::F; }
Tri tri_and(Tri a, Tri b);
Tri tri_or(Tri a, Tri b);
Tri tri_not(Tri a);
Tri tri_implies(Tri a, Tri b);

struct Null {};
/// Operand of a comparison.
using Scalar = std::variant<Null, std::int64_t, double, CivilDate, std::string>;

struct BoundField {
  const FieldSpec* spec = nullptr;
  std::size_t column = 0;
  std::optional<DateFormat> date_format;  // for date-typed fields
  std::vector<std::string> placeholders;  // declared tokens only
};

struct Node {
  ExprKind kind = ExprKind::literal;
  CompareOp op = CompareOp::eq;
  PredicateKind predicate = PredicateKind::present;
  int field = -1;  // index into Impl::fields
  Scalar literal;
  std::optional<LikePattern> pattern;
  std::optional<DateFormat> format;
  std::vector<std::string> set;
  std::int64_t n = 0, lo = 0, hi = 0;
  std::vector<Node> children;
};

struct CompiledCheck {
  const NamedCheck* spec = nullptr;
  Severity severity = Severity::error;
  Node root;
};

struct CompiledRule {
  const RecordRule* spec = nullptr;
  Node root;
  std::vector<int> fields;  // referenced fields, declaration order
};

}  // namespace odq::engine

namespace odq {

struct CompiledObject::Impl {
  const DataObjectClass* object = nullptr;
  std::vector<engine::BoundField> fields;
  std::vector<std::vector<engine::CompiledCheck>> checks;  // per field
  std::vector<engine::CompiledRule> rules;

  engine::Tri eval(const engine::Node& n, const RecordView& r) const;
  engine::Scalar value(const engine::Node& n, const RecordView& r) const;
  engine::Scalar field_value(int field, const RecordView& r) const;
};

}  // namespace odq

namespace odq::engine {

Node compile_expr(const CheckExpr& e, const CompiledObject::Impl& impl);

/// Per-thread partial result; merged in record order.
struct Partial {
  std::vector<Violation> violations;
  std::vector<std::size_t> nulls;         // per field
  std::vector<std::size_t> placeholders;  // per field
  std::vector<std::map<std::string, std::size_t>> placeholder_values;
};

Partial make_partial(std::size_t fields);

/// Null and placeholder statistics of one record.
void tally(const CompiledObject::Impl& impl, const RecordView& r, Partial& p);

/// Frequency violations, reports and collection outcomes from merged data.
EvaluationResult finish(const Dataset& ds, const CompiledObject& compiled, Partial merged,
                        const EvaluateOptions& options);

}  // namespace odq::engine
