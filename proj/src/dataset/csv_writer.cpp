#include "odq/dataset.hpp"

namespace odq {

void append_csv_field(std::string& out, std::string_view cell, char delimiter) {
  bool quote = cell.find_first_of(std::string{'"', '\n', '\r', delimiter}) != std::string_view::npos;
  // leading/trailing whitespace survives a reader that trims unquoted cells
  if (!quote && !cell.empty() && trim(cell).size() != cell.size()) quote = true;
  if (!quote) {
    out.append(cell);
    return;
  }
  out.push_back('"');
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

void append_csv_row(std::string& out, const std::vector<std::string>& cells, char delimiter) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back(delimiter);
    append_csv_field(out, cells[i], delimiter);
  }
  out.push_back('\n');
}

std::string write_csv(const Dataset& ds, char delimiter) {
  std::string out;
  append_csv_row(out, ds.header(), delimiter);
  for (std::size_t r = 0; r < ds.record_count(); ++r) {
    for (std::size_t c = 0; c < ds.column_count(); ++c) {
      if (c) out.push_back(delimiter);
      append_csv_field(out, ds.raw(r, c), delimiter);
    }
    // a lone empty cell would read back as a blank line
    if (ds.column_count() == 1 && ds.raw(r, 0).empty()) out.append("\"\"");
    out.push_back('\n');
  }
  return out;
}

}  // namespace odq
