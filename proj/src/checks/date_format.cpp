#include <cstdio>

#include "odq/checks.hpp"
#include "odq/utf8.hpp"

namespace odq {

bool is_leap_year(int year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

int days_in_month(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2 && is_leap_year(year)) return 29;
  return kDays[month - 1];
}

DateFormat::DateFormat(std::string_view spec) : spec_(spec) {
  int days = 0, months = 0, years = 0;
  std::size_t i = 0;
  while (i < spec.size()) {
    std::string_view rest = spec.substr(i);
    if (rest.starts_with("YYYY")) {
      parts_.push_back({Token::year, 0});
      ++years;
      i += 4;
    } else if (rest.starts_with("MM")) {
      parts_.push_back({Token::month, 0});
      ++months;
      i += 2;
    } else if (rest.starts_with("DD")) {
      parts_.push_back({Token::day, 0});
      ++days;
      i += 2;
    } else {
      char32_t c = utf8::next(spec, i);
      if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
        throw DateFormatError("date format '" + spec_ + "' may only contain DD, MM, YYYY and separators");
      }
      parts_.push_back({Token::literal, c});
    }
  }
  if (days != 1 || months != 1 || years != 1) {
    throw DateFormatError("date format '" + spec_ + "' must contain DD, MM and YYYY exactly once");
  }
}

std::string DateFormat::format(const CivilDate& d) const {
  std::string out;
  char buf[8];
  for (const auto& p : parts_) {
    switch (p.token) {
      case Token::day: std::snprintf(buf, sizeof buf, "%02d", d.day); out += buf; break;
      case Token::month: std::snprintf(buf, sizeof buf, "%02d", d.month); out += buf; break;
      case Token::year: std::snprintf(buf, sizeof buf, "%04d", d.year); out += buf; break;
      case Token::literal: utf8::append(out, p.literal); break;
    }
  }
  return out;
}

std::string_view to_string(DateCheck c) {
  switch (c) {
    case DateCheck::valid: return "valid";
    case DateCheck::wrong_format: return "wrong_format";
    case DateCheck::invalid_date: return "invalid_date";
  }
  return "?";
}

namespace {

bool read_digits(std::string_view s, std::size_t& pos, int count, int& out) {
  if (pos + count > s.size()) return false;
  int v = 0;
  for (int k = 0; k < count; ++k) {
    char c = s[pos + k];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  pos += count;
  out = v;
  return true;
}

DateCheck scan(std::string_view value, const DateFormat& fmt, CivilDate& out) {
  std::size_t pos = 0;
  for (const auto& p : fmt.parts()) {
    bool ok = true;
    switch (p.token) {
      case DateFormat::Token::day: ok = read_digits(value, pos, 2, out.day); break;
      case DateFormat::Token::month: ok = read_digits(value, pos, 2, out.month); break;
      case DateFormat::Token::year: ok = read_digits(value, pos, 4, out.year); break;
      case DateFormat::Token::literal:
        ok = pos < value.size() && utf8::next(value, pos) == p.literal;
        break;
    }
    if (!ok) return DateCheck::wrong_format;
  }
  if (pos != value.size()) return DateCheck::wrong_format;
  if (out.year < 1 || out.month < 1 || out.month > 12 || out.day < 1 ||
      out.day > days_in_month(out.year, out.month)) {
    return DateCheck::invalid_date;
  }
  return DateCheck::valid;
}

}  // namespace

DateCheck check_date(std::string_view value, const DateFormat& fmt) {
  CivilDate d;
  return scan(value, fmt, d);
}

std::optional<CivilDate> parse_date(std::string_view value, const DateFormat& fmt) {
  CivilDate d;
  if (scan(value, fmt, d) != DateCheck::valid) return std::nullopt;
  return d;
}

}  // namespace odq
