#include <fstream>
#include <sstream>

#include "odq/dataset.hpp"
#include "odq/utf8.hpp"

namespace odq {

Dataset::Builder::Builder(std::string source_name, std::vector<std::string> header) {
  ds_.source_name_ = std::move(source_name);
  ds_.header_ = std::move(header);
}

std::size_t Dataset::Builder::cells_in_row() const {
  return ds_.offsets_.size() - 1 - ds_.rows_ * ds_.header_.size();
}

void Dataset::Builder::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != ds_.header_.size()) {
    throw DataError("row " + std::to_string(ds_.rows_ + 1) + " has " + std::to_string(cells.size()) +
                    " cells, expected " + std::to_string(ds_.header_.size()));
  }
  for (const auto& c : cells) {
    append(c);
    end_cell();
  }
  end_row();
}

Dataset Dataset::Builder::build() && { return std::move(ds_); }

std::optional<std::size_t> Dataset::column_index(std::string_view name) const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] != name) continue;
    if (found) throw DataError("column '" + std::string(name) + "' appears more than once in " + source_name_);
    found = i;
  }
  return found;
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& order) const {
  Builder b(source_name_, header_);
  for (std::size_t r : order) {
    for (std::size_t c = 0; c < header_.size(); ++c) {
      b.append(raw(r, c));
      b.end_cell();
    }
    b.end_row();
  }
  return std::move(b).build();
}

bool operator==(const Dataset& a, const Dataset& b) {
  if (a.header_ != b.header_ || a.rows_ != b.rows_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.header_.size(); ++c) {
      if (a.raw(r, c) != b.raw(r, c)) return false;
    }
  }
  return true;
}

namespace {

// Single pass over the buffer. The first record either becomes the header or
// fixes the arity for synthetic col_N names.
class CsvParser {
 public:
  CsvParser(std::string_view text, char delim) : text_(text), delim_(delim) {}

  // Reads one record into `cells`. Returns false at end of input.
  bool next_record(std::vector<std::string>& cells) {
    cells.clear();
    if (pos_ >= text_.size()) return false;
    record_line_ = line_;
    std::string cell;
    while (true) {
      cell.clear();
      bool at_end = read_cell(cell);
      cells.push_back(cell);
      if (at_end) return true;
    }
  }

  std::size_t record_line() const { return record_line_; }
  bool done() const { return pos_ >= text_.size(); }

 private:
  // Returns true when the cell ended the record.
  bool read_cell(std::string& cell) {
    if (pos_ < text_.size() && text_[pos_] == '"') {
      std::size_t start_line = line_;
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) {
          throw DataError("unterminated quoted field starting on line " + std::to_string(start_line));
        }
        char c = text_[pos_++];
        if (c == '"') {
          if (pos_ < text_.size() && text_[pos_] == '"') {
            cell.push_back('"');
            ++pos_;
          } else {
            break;
          }
        } else {
          if (c == '\n') ++line_;
          cell.push_back(c);
        }
      }
      // after the closing quote only a delimiter or line break may follow
      if (pos_ >= text_.size()) return true;
      char c = text_[pos_];
      if (c == delim_) {
        ++pos_;
        return false;
      }
      if (end_of_line()) return true;
      throw DataError("unexpected character after closing quote on line " + std::to_string(line_));
    }
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == delim_) {
        ++pos_;
        return false;
      }
      if (end_of_line()) return true;
      // a quote inside an unquoted field is kept literally
      cell.push_back(c);
      ++pos_;
    }
    return true;
  }

  bool end_of_line() {
    if (text_[pos_] == '\n') {
      ++pos_;
      ++line_;
      return true;
    }
    if (text_[pos_] == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') {
      pos_ += 2;
      ++line_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  char delim_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t record_line_ = 1;
};

std::string_view strip_trailing_breaks(std::string_view text) {
  // Line breaks at end of input terminate the last record; they do not open
  // empty records.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

}  // namespace

Dataset parse_csv(std::string_view text, std::string source_name, const CsvOptions& options) {
  if (options.delimiter == '"' || options.delimiter == '\n' || options.delimiter == '\r') {
    throw DataError("invalid delimiter");
  }
  if (auto bad = utf8::find_invalid(text)) {
    throw DataError(source_name + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  // Only strip when the text does not end inside an open quoted field; the
  // parser reports that case.
  std::string_view body = strip_trailing_breaks(text);
  if (body.size() != text.size()) {
    std::size_t quotes = 0;
    for (char c : body) quotes += (c == '"');
    if (quotes % 2 == 1) body = text;
  }

  CsvParser parser(body, options.delimiter);
  std::vector<std::string> cells;
  std::vector<std::string> header;
  bool have_first = parser.next_record(cells);
  std::vector<std::string> first_data;
  if (options.has_header) {
    for (auto& c : cells) header.emplace_back(trim(c));
  } else if (have_first) {
    for (std::size_t i = 0; i < cells.size(); ++i) header.push_back("col_" + std::to_string(i + 1));
    first_data = cells;
  }

  Dataset::Builder builder(std::move(source_name), header);
  std::size_t row = 0;
  auto add = [&](const std::vector<std::string>& rec, std::size_t line) {
    ++row;
    if (rec.size() != header.size()) {
      throw DataError("ragged row " + std::to_string(row) + " (line " + std::to_string(line) + "): " +
                      std::to_string(rec.size()) + " cells, expected " + std::to_string(header.size()));
    }
    for (const auto& c : rec) {
      builder.append(c);
      builder.end_cell();
    }
    builder.end_row();
  };
  if (!options.has_header && have_first) add(first_data, parser.record_line());
  while (parser.next_record(cells)) add(cells, parser.record_line());
  return std::move(builder).build();
}

Dataset read_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError("cannot read " + path.string());
  return parse_csv(buf.str(), path.filename().string(), options);
}

}  // namespace odq
