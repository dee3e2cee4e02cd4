#pragma once

// Primitive predicates behind the check language: existence, data type,
// format (length), pattern, enumeration and value validity, plus placeholder
// detection. All functions are pure.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace odq {

struct CellValue;

struct CivilDate {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const CivilDate&) const = default;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);

class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// SQL LIKE pattern: `%` any sequence (including empty), `_` exactly one code
/// point, backslash escapes `%`, `_` and `\`. Matching is anchored at both ends.
class LikePattern {
 public:
  struct Atom {
    enum class Kind { literal, any_sequence, any_one };
    Kind kind = Kind::literal;
    std::u32string text;  // literal run, case-folded when case-insensitive

    bool operator==(const Atom&) const = default;
  };

  /// Throws PatternError on a dangling backslash or an escape of anything
  /// other than a wildcard or backslash.
  explicit LikePattern(std::string_view source, bool case_insensitive = false);

  bool matches(std::string_view value) const;

  const std::string& source() const { return source_; }
  bool case_insensitive() const { return nocase_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  /// Re-escapes the compiled atoms. Equals source() for any accepted input.
  std::string decompile() const;

 private:
  std::string source_;
  bool nocase_ = false;
  std::vector<Atom> atoms_;
  std::vector<std::u32string> original_literals_;
};

bool match_like(std::string_view value, const LikePattern& pattern);

class DateFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Date layout built from DD, MM, YYYY (each exactly once) and literal
/// separator characters, e.g. "MM/DD/YYYY".
class DateFormat {
 public:
  enum class Token { day, month, year, literal };
  struct Part {
    Token token = Token::literal;
    char32_t literal = 0;
  };

  explicit DateFormat(std::string_view spec);

  const std::string& spec() const { return spec_; }
  const std::vector<Part>& parts() const { return parts_; }

  std::string format(const CivilDate& d) const;

 private:
  std::string spec_;
  std::vector<Part> parts_;
};

enum class DateCheck { valid, wrong_format, invalid_date };

std::string_view to_string(DateCheck c);

DateCheck check_date(std::string_view value, const DateFormat& fmt);

/// Parsed date, or nullopt when the value is not `valid` under `fmt`.
std::optional<CivilDate> parse_date(std::string_view value, const DateFormat& fmt);

bool check_present(const CellValue& cell);
bool check_digits(std::string_view value, std::size_t n);
bool check_length(std::string_view value, std::size_t n);
bool check_starts_with(std::string_view value, std::string_view prefix);
bool check_in_set(std::string_view value, std::span<const std::string> allowed);
bool check_year_between(const CivilDate& value, int lo, int hi);

/// Whole-value, case-insensitive comparison of the trimmed value against each
/// token.
bool check_placeholder(std::string_view value, std::span<const std::string> tokens);

bool is_integer_text(std::string_view value);
bool is_decimal_text(std::string_view value);

}  // namespace odq
