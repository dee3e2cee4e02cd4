#pragma once

// Data exploration: per-column statistics, type and nullability inference,
// enumeration candidates and draft specification output.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odq/dataset.hpp"
#include "odq/spec.hpp"

namespace odq {

struct ValueCount {
  std::string value;
  std::size_t count = 0;

  bool operator==(const ValueCount&) const = default;
};

struct FieldProfile {
  std::string field_name;
  std::size_t record_count = 0;
  std::size_t non_null_count = 0;
  std::size_t null_count = 0;
  double null_rate_pct = 0.0;
  FieldType inferred_type;
  std::size_t distinct_count = 0;
  std::vector<ValueCount> top_values;    // count desc, then value
  std::vector<ValueCount> value_counts;  // every value by (count desc, value); empty when too many distinct
  std::size_t placeholder_hits = 0;
  std::vector<ValueCount> placeholder_values;
  std::optional<std::size_t> uniform_digits;  // every non-placeholder value is n decimal digits
  std::optional<std::vector<std::string>> enum_candidate;

  bool operator==(const FieldProfile&) const = default;
};

struct ProfileOptions {
  std::vector<std::string> date_formats{"DD.MM.YYYY", "MM/DD/YYYY", "YYYY-MM-DD"};
  std::size_t top_n = 10;
  std::size_t keep_values = 256;  // value_counts kept when distinct_count is at most this
  std::size_t max_distinct = 12;
  std::size_t min_support = 4;
  int workers = 0;  // 0 = OpenMP default
};

FieldProfile profile_column(const Dataset& dataset, std::size_t column, const ProfileOptions& options = {});

/// One profile per column, columns profiled in parallel.
std::vector<FieldProfile> profile_dataset(const Dataset& dataset, const ProfileOptions& options = {});

/// Single-threaded reference.
std::vector<FieldProfile> profile_dataset_serial(const Dataset& dataset, const ProfileOptions& options = {});

/// not_null iff null_rate_pct < threshold_pct. A column without records is
/// nullable.
Nullability suggest_nullability(const FieldProfile& profile, double threshold_pct = 3.0);

struct EnumSuggestion {
  std::vector<std::string> members;  // byte order
  std::vector<ValueCount> rare;      // below min_support, by (count, value)

  bool operator==(const EnumSuggestion&) const = default;
};

/// Placeholder values never become members.
std::optional<EnumSuggestion> suggest_enum(const FieldProfile& profile, std::size_t max_distinct = 12,
                                           std::size_t min_support = 4);

struct DraftOptions {
  double null_threshold_pct = 3.0;
  std::size_t max_distinct = 12;
  std::size_t min_support = 4;
  std::string source_name;
};

/// Field declaration suggested by a profile, without evidence comments.
FieldSpec draft_field(const FieldProfile& profile, const DraftOptions& options = {});

/// `.dq` text for one object with `#` evidence comments above every field.
std::string generate_draft_spec(const std::vector<FieldProfile>& profiles, std::string_view object_name,
                                const DraftOptions& options = {});

/// Just the `object ... { ... }` block of generate_draft_spec.
std::string generate_draft_object(const std::vector<FieldProfile>& profiles, std::string_view object_name,
                                  const DraftOptions& options = {});

std::string profile_to_json(const std::vector<FieldProfile>& profiles, std::string_view source_name);

}  // namespace odq
