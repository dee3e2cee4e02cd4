#include <algorithm>
#include <set>

#include "engine/internal.hpp"
#include "odq/spec_dsl.hpp"

namespace odq {

bool protocol_less(const Violation& a, const Violation& b) {
  if (a.row_index != b.row_index) return a.row_index < b.row_index;
  if (a.field_name != b.field_name) return a.field_name < b.field_name;
  return a.rule_name < b.rule_name;
}

namespace {

void collect_fields(const CheckExpr& e, std::set<std::string>& out) {
  if (e.kind == ExprKind::field_ref || e.kind == ExprKind::predicate) out.insert(e.field);
  for (const auto& c : e.children) collect_fields(c, out);
}

std::string type_name(const FieldType& t) {
  switch (t.base) {
    case BaseType::integer: return "integer";
    case BaseType::decimal: return "decimal";
    case BaseType::date: return "date (" + t.date_format + ")";
    case BaseType::text: return "text";
  }
  return "text";
}

}  // namespace

CompiledObject::CompiledObject(const DataObjectClass& object, const std::vector<std::string>& header)
    : impl_(std::make_unique<Impl>()) {
  impl_->object = &object;
  for (const auto& f : object.fields) {
    auto it = std::find(header.begin(), header.end(), f.name);
    if (it == header.end()) {
      throw BindingError("field '" + f.name + "' of object '" + object.name + "' has no column in the data header");
    }
    if (std::find(it + 1, header.end(), f.name) != header.end()) {
      throw BindingError("column '" + f.name + "' appears more than once in the data header");
    }
    engine::BoundField b;
    b.spec = &f;
    b.column = static_cast<std::size_t>(it - header.begin());
    if (f.type.base == BaseType::date) b.date_format.emplace(f.type.date_format);
    if (f.placeholder_tokens) b.placeholders = *f.placeholder_tokens;
    impl_->fields.push_back(std::move(b));
  }
  for (const auto& f : object.fields) {
    std::vector<engine::CompiledCheck> checks;
    for (const auto& c : f.checks) checks.push_back({&c, f.severity_of(c), engine::compile_expr(c.expr, *impl_)});
    impl_->checks.push_back(std::move(checks));
  }
  for (const auto& r : object.record_rules) {
    engine::CompiledRule cr{&r, engine::compile_expr(r.expr, *impl_), {}};
    std::set<std::string> names;
    collect_fields(r.expr, names);
    for (std::size_t i = 0; i < impl_->fields.size(); ++i) {
      if (names.count(impl_->fields[i].spec->name)) cr.fields.push_back(static_cast<int>(i));
    }
    impl_->rules.push_back(std::move(cr));
  }
}

CompiledObject::~CompiledObject() = default;
CompiledObject::CompiledObject(CompiledObject&&) noexcept = default;
CompiledObject& CompiledObject::operator=(CompiledObject&&) noexcept = default;

const DataObjectClass& CompiledObject::object() const { return *impl_->object; }

void CompiledObject::evaluate(const RecordView& r, std::vector<Violation>& out) const {
  const Impl& m = *impl_;
  const std::string& object_name = m.object->name;
  auto emit = [&](const std::string& field, std::string_view rule, Severity sev, std::string observed,
                  std::string message) {
    out.push_back({object_name, r.row_index(), field, std::string(rule), sev, std::move(observed), std::move(message)});
  };

  for (std::size_t i = 0; i < m.fields.size(); ++i) {
    const auto& bf = m.fields[i];
    const FieldSpec& f = *bf.spec;
    std::string_view raw = r.raw(bf.column);
    std::string_view v = trim(raw);
    if (v.empty()) {
      if (f.nullability == Nullability::not_null) {
        emit(f.name, kNotNullRule, f.severity_default, std::string(raw), "value is missing");
      }
      continue;
    }
    if (!bf.placeholders.empty() && check_placeholder(v, bf.placeholders)) {
      emit(f.name, kPlaceholderRule, f.severity_default, std::string(raw), "placeholder value '" + std::string(v) + "'");
      continue;
    }
    switch (f.type.base) {
      case BaseType::integer:
        if (!is_integer_text(v)) emit(f.name, kTypeRule, f.severity_default, std::string(raw), "not a valid " + type_name(f.type));
        break;
      case BaseType::decimal:
        if (!is_decimal_text(v)) emit(f.name, kTypeRule, f.severity_default, std::string(raw), "not a valid " + type_name(f.type));
        break;
      case BaseType::date: {
        DateCheck c = check_date(v, *bf.date_format);
        if (c != DateCheck::valid) {
          emit(f.name, kTypeRule, f.severity_default, std::string(raw),
               std::string(c == DateCheck::wrong_format ? "wrong format, expected " : "invalid calendar date, expected ") +
                   f.type.date_format);
        }
        break;
      }
      case BaseType::text:
        break;
    }
    for (const auto& c : m.checks[i]) {
      if (m.eval(c.root, r) == engine::Tri::F) {
        emit(f.name, c.spec->name, c.severity, std::string(raw), "check '" + c.spec->name + "' failed: " + serialize_expr(c.spec->expr));
      }
    }
  }

  static const std::string kNoField;
  for (const auto& rule : m.rules) {
    if (m.eval(rule.root, r) != engine::Tri::F) continue;
    std::string observed;
    for (int fi : rule.fields) {
      const auto& bf = m.fields[static_cast<std::size_t>(fi)];
      if (!observed.empty()) observed += "; ";
      observed += bf.spec->name + "=" + std::string(r.value(bf.column));
    }
    emit(kNoField, rule.spec->name, rule.spec->severity, std::move(observed), "rule '" + rule.spec->name + "' failed");
  }
}

std::vector<Violation> evaluate_record(const RecordView& record, const DataObjectClass& object,
                                       const std::vector<std::string>& header) {
  CompiledObject compiled(object, header);
  std::vector<Violation> out;
  compiled.evaluate(record, out);
  std::sort(out.begin(), out.end(), protocol_less);
  return out;
}

}  // namespace odq
