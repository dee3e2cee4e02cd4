#include <compare>

#include "engine/internal.hpp"
#include "odq/spec_dsl.hpp"

namespace odq::engine {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::F || b == Tri::F) return Tri::F;
  if (a == Tri::U || b == Tri::U) return Tri::U;
  return Tri::T;
}

Tri tri_or(Tri a, Tri b) {
  if (a == Tri::T || b == Tri::T) return Tri::T;
  if (a == Tri::U || b == Tri::U) return Tri::U;
  return Tri::F;
}

Tri tri_not(Tri a) {
  if (a == Tri::U) return Tri::U;
  return a == Tri::T ? Tri::F : Tri::T;
}

Tri tri_implies(Tri a, Tri b) { return tri_or(tri_not(a), b); }

namespace {

int find_field(const CompiledObject::Impl& impl, const std::string& name) {
  for (std::size_t i = 0; i < impl.fields.size(); ++i) {
    if (impl.fields[i].spec->name == name) return static_cast<int>(i);
  }
  throw BindingError("unknown field '" + name + "'");
}

std::string literal_text(const Literal& l) {
  if (auto s = std::get_if<std::string>(&l)) return *s;
  return serialize_expr(CheckExpr{.kind = ExprKind::literal, .literal = l});
}

Scalar to_scalar(const Literal& l) {
  if (auto s = std::get_if<std::string>(&l)) return *s;
  if (auto i = std::get_if<std::int64_t>(&l)) return *i;
  return std::get<double>(l);
}

bool holds(std::partial_ordering c, CompareOp op) {
  switch (op) {
    case CompareOp::eq: return c == 0;
    case CompareOp::ne: return c != 0;
    case CompareOp::lt: return c < 0;
    case CompareOp::le: return c <= 0;
    case CompareOp::gt: return c > 0;
    case CompareOp::ge: return c >= 0;
  }
  return false;
}

bool is_number(const Scalar& s) { return std::holds_alternative<std::int64_t>(s) || std::holds_alternative<double>(s); }

long double as_number(const Scalar& s) {
  if (auto i = std::get_if<std::int64_t>(&s)) return static_cast<long double>(*i);
  return std::get<double>(s);
}

std::string as_text(const Scalar& s) {
  if (auto t = std::get_if<std::string>(&s)) return *t;
  if (auto i = std::get_if<std::int64_t>(&s)) return std::to_string(*i);
  if (auto d = std::get_if<double>(&s)) return literal_text(*d);
  return {};
}

// Text operands are reinterpreted to match a typed counterpart when possible.
std::partial_ordering compare_scalars(const Scalar& a, const Scalar& b, const DateFormat* fmt) {
  if (is_number(a) && is_number(b)) {
    if (std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b)) {
      return std::get<std::int64_t>(a) <=> std::get<std::int64_t>(b);
    }
    return as_number(a) <=> as_number(b);
  }
  auto date_of = [&](const Scalar& s) -> std::optional<CivilDate> {
    if (auto d = std::get_if<CivilDate>(&s)) return *d;
    if (auto t = std::get_if<std::string>(&s); t && fmt) return parse_date(*t, *fmt);
    return std::nullopt;
  };
  if (std::holds_alternative<CivilDate>(a) || std::holds_alternative<CivilDate>(b)) {
    auto da = date_of(a);
    auto db = date_of(b);
    if (da && db) return *da <=> *db;
  }
  if (is_number(a) || is_number(b)) {
    const Scalar& text = is_number(a) ? b : a;
    if (auto t = std::get_if<std::string>(&text)) {
      if (auto v = parse_decimal(*t)) {
        Scalar num = *v;
        if (auto i = parse_integer(*t)) num = *i;
        return is_number(a) ? compare_scalars(a, num, fmt) : compare_scalars(num, b, fmt);
      }
    }
  }
  return as_text(a).compare(as_text(b)) <=> 0;
}

}  // namespace

Node compile_expr(const CheckExpr& e, const CompiledObject::Impl& impl) {
  Node n;
  n.kind = e.kind;
  n.op = e.op;
  n.predicate = e.predicate;
  for (const auto& c : e.children) n.children.push_back(compile_expr(c, impl));
  switch (e.kind) {
    case ExprKind::field_ref:
      n.field = find_field(impl, e.field);
      break;
    case ExprKind::literal:
      n.literal = to_scalar(e.literal);
      break;
    case ExprKind::predicate:
      n.field = find_field(impl, e.field);
      switch (e.predicate) {
        case PredicateKind::matches:
          n.pattern.emplace(std::get<std::string>(e.args[0]), e.nocase);
          break;
        case PredicateKind::digits:
        case PredicateKind::length:
          n.n = std::get<std::int64_t>(e.args[0]);
          break;
        case PredicateKind::starts_with:
          n.set.push_back(std::get<std::string>(e.args[0]));
          break;
        case PredicateKind::in_set:
          for (const auto& a : e.args) n.set.push_back(literal_text(a));
          break;
        case PredicateKind::date_valid:
          n.format.emplace(std::get<std::string>(e.args[0]));
          break;
        case PredicateKind::year_between:
          n.lo = std::get<std::int64_t>(e.args[0]);
          n.hi = std::get<std::int64_t>(e.args[1]);
          if (e.args.size() == 3) {
            n.format.emplace(std::get<std::string>(e.args[2]));
          } else {
            n.format = impl.fields[static_cast<std::size_t>(n.field)].date_format;
          }
          break;
        default:
          break;
      }
      break;
    default:
      break;
  }
  return n;
}

}  // namespace odq::engine

namespace odq {

using engine::Node;
using engine::Scalar;
using engine::Tri;

Scalar CompiledObject::Impl::field_value(int field, const RecordView& r) const {
  const auto& f = fields[static_cast<std::size_t>(field)];
  std::string_view v = r.value(f.column);
  if (v.empty()) return engine::Null{};
  switch (f.spec->type.base) {
    case BaseType::integer:
      if (auto i = parse_integer(v)) return *i;
      break;
    case BaseType::decimal:
      if (auto d = parse_decimal(v)) return *d;
      break;
    case BaseType::date:
      if (auto d = parse_date(v, *f.date_format)) return *d;
      break;
    case BaseType::text:
      break;
  }
  return std::string(v);
}

Scalar CompiledObject::Impl::value(const Node& n, const RecordView& r) const {
  if (n.kind == ExprKind::field_ref) return field_value(n.field, r);
  return n.literal;
}

Tri CompiledObject::Impl::eval(const Node& n, const RecordView& r) const {
  switch (n.kind) {
    case ExprKind::and_: {
      Tri a = eval(n.children[0], r);
      if (a == Tri::F) return Tri::F;
      return engine::tri_and(a, eval(n.children[1], r));
    }
    case ExprKind::or_: {
      Tri a = eval(n.children[0], r);
      if (a == Tri::T) return Tri::T;
      return engine::tri_or(a, eval(n.children[1], r));
    }
    case ExprKind::implies: {
      Tri a = eval(n.children[0], r);
      if (a == Tri::F) return Tri::T;
      return engine::tri_implies(a, eval(n.children[1], r));
    }
    case ExprKind::not_:
      return engine::tri_not(eval(n.children[0], r));
    case ExprKind::compare: {
      const Node& l = n.children[0];
      const Node& rr = n.children[1];
      if (l.kind != ExprKind::field_ref && l.kind != ExprKind::literal) {
        Tri a = eval(l, r);
        Tri b = eval(rr, r);
        if (a == Tri::U || b == Tri::U) return Tri::U;
        return engine::tri((a == b) == (n.op == CompareOp::eq));
      }
      Scalar a = value(l, r);
      Scalar b = value(rr, r);
      if (std::holds_alternative<engine::Null>(a) || std::holds_alternative<engine::Null>(b)) return Tri::U;
      const DateFormat* fmt = nullptr;
      for (const Node* side : {&l, &rr}) {
        if (side->kind == ExprKind::field_ref && fields[static_cast<std::size_t>(side->field)].date_format) {
          fmt = &*fields[static_cast<std::size_t>(side->field)].date_format;
        }
      }
      return engine::tri(engine::holds(engine::compare_scalars(a, b, fmt), n.op));
    }
    case ExprKind::predicate: {
      const auto& f = fields[static_cast<std::size_t>(n.field)];
      std::string_view v = r.value(f.column);
      if (n.predicate == PredicateKind::present) return engine::tri(!v.empty());
      if (v.empty()) return Tri::U;
      switch (n.predicate) {
        case PredicateKind::matches: return engine::tri(n.pattern->matches(v));
        case PredicateKind::digits: return engine::tri(check_digits(v, static_cast<std::size_t>(n.n)));
        case PredicateKind::length: return engine::tri(check_length(v, static_cast<std::size_t>(n.n)));
        case PredicateKind::starts_with: return engine::tri(check_starts_with(v, n.set[0]));
        case PredicateKind::in_set: return engine::tri(check_in_set(v, n.set));
        case PredicateKind::date_valid: return engine::tri(check_date(v, *n.format) == DateCheck::valid);
        case PredicateKind::year_between: {
          auto d = parse_date(v, *n.format);
          return engine::tri(d && check_year_between(*d, static_cast<int>(n.lo), static_cast<int>(n.hi)));
        }
        case PredicateKind::is_integer: return engine::tri(is_integer_text(v));
        case PredicateKind::is_decimal: return engine::tri(is_decimal_text(v));
        default: return Tri::U;
      }
    }
    default:
      return Tri::U;
  }
}

}  // namespace odq
