#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "odq/checks.hpp"
#include "odq/spec.hpp"

namespace odq {

/// Typed value produced by coercion.
using TypedValue = std::variant<std::int64_t, double, CivilDate, std::string>;

struct CellValue {
  std::string raw;
  bool is_null = false;
  std::optional<TypedValue> coerced;
  bool coercion_failed = false;
};

/// Strips leading and trailing ASCII whitespace.
std::string_view trim(std::string_view s);

/// Coerces a raw cell against a declared type. Failure is reported through
/// `coercion_failed`, never by throwing.
CellValue coerce_cell(std::string_view raw, const FieldType& type);

/// Non-throwing building blocks used by coerce_cell and the engine.
std::optional<std::int64_t> parse_integer(std::string_view trimmed);
std::optional<double> parse_decimal(std::string_view trimmed);

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Dataset;

/// Lightweight view of one data row. Row indices are 1-based and exclude the
/// header.
class RecordView {
 public:
  RecordView(const Dataset& ds, std::size_t index) : ds_(&ds), index_(index) {}

  std::size_t row_index() const { return index_ + 1; }
  std::size_t size() const;
  std::string_view raw(std::size_t column) const;
  std::string_view value(std::size_t column) const { return trim(raw(column)); }
  bool is_null(std::size_t column) const { return value(column).empty(); }

 private:
  const Dataset* ds_;
  std::size_t index_;
};

/// Immutable table of raw cell text. Cells live in one contiguous arena, so a
/// dataset costs roughly its file size plus one offset per cell.
class Dataset {
 public:
  class Builder;

  Dataset() = default;

  const std::string& source_name() const { return source_name_; }
  const std::vector<std::string>& header() const { return header_; }
  std::size_t column_count() const { return header_.size(); }
  std::size_t record_count() const { return rows_; }

  /// Column index for a header name, or nullopt. Throws DataError if the name
  /// appears more than once.
  std::optional<std::size_t> column_index(std::string_view name) const;

  std::string_view raw(std::size_t row, std::size_t column) const {
    const std::size_t k = row * header_.size() + column;
    return std::string_view(arena_).substr(offsets_[k], offsets_[k + 1] - offsets_[k]);
  }

  RecordView record(std::size_t row) const { return RecordView(*this, row); }

  /// Copy of the rows listed in `order` (0-based), renumbered from 1.
  Dataset select_rows(const std::vector<std::size_t>& order) const;

  friend bool operator==(const Dataset& a, const Dataset& b);

 private:
  std::string source_name_;
  std::vector<std::string> header_;
  std::string arena_;
  std::vector<std::uint64_t> offsets_{0};
  std::size_t rows_ = 0;
};

class Dataset::Builder {
 public:
  Builder(std::string source_name, std::vector<std::string> header);

  /// Throws DataError when the row does not have one cell per column.
  void add_row(const std::vector<std::string>& cells);

  void append(std::string_view bytes) { ds_.arena_.append(bytes); }
  void end_cell() { ds_.offsets_.push_back(ds_.arena_.size()); }
  std::size_t cells_in_row() const;
  void end_row() { ++ds_.rows_; }

  Dataset build() &&;

 private:
  Dataset ds_;
};

struct CsvOptions {
  char delimiter = ',';
  bool has_header = true;
};

/// RFC 4180 reader. Quoted fields may hold delimiters, doubled quotes and line
/// breaks; CRLF and LF are both accepted; a UTF-8 BOM is skipped.
///
/// Throws DataError for unreadable files, invalid UTF-8 (naming the byte
/// offset) and rows whose arity differs from the header (naming the row).
Dataset read_csv(const std::filesystem::path& path, const CsvOptions& options = {});
Dataset parse_csv(std::string_view text, std::string source_name, const CsvOptions& options = {});

/// Quote-minimal RFC 4180 output with LF line endings.
std::string write_csv(const Dataset& ds, char delimiter = ',');
void append_csv_field(std::string& out, std::string_view cell, char delimiter = ',');
void append_csv_row(std::string& out, const std::vector<std::string>& cells, char delimiter = ',');

inline std::size_t RecordView::size() const { return ds_->column_count(); }
inline std::string_view RecordView::raw(std::size_t column) const { return ds_->raw(index_, column); }

}  // namespace odq
