#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "odq/spec.hpp"

namespace odq {

struct Diagnostic {
  enum class Level { error, warning };
  Level level = Level::error;
  std::string message;
  SourceLoc loc;

  std::string format(std::string_view source_name = {}) const;
};

/// Thrown by parse_spec. Carries every error-level diagnostic found; the
/// first one is also the exception message.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(std::vector<Diagnostic> diags);

  const std::vector<Diagnostic>& diagnostics() const { return diags_; }
  SourceLoc loc() const { return diags_.front().loc; }

 private:
  std::vector<Diagnostic> diags_;
};

/// Parses and semantically validates `.dq` source text.
///
/// Inside a field block, predicate calls may omit their first argument; the
/// enclosing field is filled in. Unnamed checks are named after their
/// predicate (`digits`, `digits_2`, ...) or `check` for other expressions.
QualitySpec parse_spec(std::string_view source);

/// Canonical text: two-space indentation, one statement per line, every name
/// and nullability written explicitly.
std::string serialize_spec(const QualitySpec& spec);

/// Canonical text of a single field declaration, indented by `indent` spaces.
std::string serialize_field(const FieldSpec& field, int indent = 2);

std::string serialize_expr(const CheckExpr& expr);

/// Errors for broken invariants (unknown references, duplicate names, type
/// errors, malformed arguments) and warnings for suspicious constructs.
std::vector<Diagnostic> check_spec_semantics(const QualitySpec& spec);

/// True when `name` can be written without backticks.
bool is_plain_identifier(std::string_view name);

}  // namespace odq
