#include <charconv>
#include <string>

#include "odq/dataset.hpp"

namespace odq {

std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; };
  std::size_t b = 0, e = s.size();
  while (b < e && ws(s[b])) ++b;
  while (e > b && ws(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::optional<std::int64_t> parse_integer(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') return std::nullopt;
  }
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_decimal(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  int digits = 0, dots = 0;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '.') {
      ++dots;
    } else if (s[k] >= '0' && s[k] <= '9') {
      ++digits;
    } else {
      return std::nullopt;
    }
  }
  if (digits == 0 || dots > 1) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

CellValue coerce_cell(std::string_view raw, const FieldType& type) {
  CellValue cell;
  cell.raw = std::string(raw);
  std::string_view v = trim(raw);
  cell.is_null = v.empty();
  if (cell.is_null) return cell;

  switch (type.base) {
    case BaseType::text:
      cell.coerced = std::string(v);
      break;
    case BaseType::integer:
      if (auto i = parse_integer(v)) cell.coerced = *i;
      break;
    case BaseType::decimal:
      if (auto d = parse_decimal(v)) cell.coerced = *d;
      break;
    case BaseType::date:
      if (auto d = parse_date(v, DateFormat(type.date_format))) cell.coerced = *d;
      break;
  }
  cell.coercion_failed = !cell.coerced.has_value();
  return cell;
}

}  // namespace odq
