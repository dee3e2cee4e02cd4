#include <algorithm>

#include "odq/checks.hpp"
#include "odq/dataset.hpp"
#include "odq/utf8.hpp"

namespace odq {

bool check_present(const CellValue& cell) { return !cell.is_null; }

bool check_digits(std::string_view value, std::size_t n) {
  return value.size() == n && std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool check_length(std::string_view value, std::size_t n) { return utf8::length(value) == n; }

bool check_starts_with(std::string_view value, std::string_view prefix) { return value.starts_with(prefix); }

bool check_in_set(std::string_view value, std::span<const std::string> allowed) {
  return std::find(allowed.begin(), allowed.end(), value) != allowed.end();
}

bool check_year_between(const CivilDate& value, int lo, int hi) { return lo <= value.year && value.year <= hi; }

bool check_placeholder(std::string_view value, std::span<const std::string> tokens) {
  value = trim(value);
  return std::any_of(tokens.begin(), tokens.end(), [&](const std::string& t) { return utf8::iequals(value, t); });
}

bool is_integer_text(std::string_view value) { return parse_integer(value).has_value(); }

bool is_decimal_text(std::string_view value) { return parse_decimal(value).has_value(); }

}  // namespace odq
