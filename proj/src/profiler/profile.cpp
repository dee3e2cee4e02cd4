#include <omp.h>

#include <algorithm>
#include <unordered_map>

#include "odq/checks.hpp"
#include "odq/profiler.hpp"

namespace odq {

namespace {

bool by_count_desc(const ValueCount& a, const ValueCount& b) {
  return a.count != b.count ? a.count > b.count : a.value < b.value;
}

bool all_digits(std::string_view v) {
  return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; });
}

FieldType infer_type(const std::vector<ValueCount>& values, const ProfileOptions& options) {
  if (values.empty()) return {BaseType::text, {}};
  auto all = [&](auto pred) {
    return std::all_of(values.begin(), values.end(), [&](const ValueCount& v) { return pred(v.value); });
  };
  if (all([](const std::string& v) { return is_integer_text(v); })) return {BaseType::integer, {}};
  if (all([](const std::string& v) { return is_decimal_text(v); })) return {BaseType::decimal, {}};
  for (const auto& spec : options.date_formats) {
    DateFormat fmt(spec);
    if (all([&](const std::string& v) { return check_date(v, fmt) == DateCheck::valid; })) return {BaseType::date, spec};
  }
  return {BaseType::text, {}};
}

}  // namespace

FieldProfile profile_column(const Dataset& ds, std::size_t column, const ProfileOptions& options) {
  FieldProfile p;
  p.field_name = ds.header().at(column);
  p.record_count = ds.record_count();

  std::unordered_map<std::string_view, std::size_t> counts;
  for (std::size_t row = 0; row < ds.record_count(); ++row) {
    std::string_view v = trim(ds.raw(row, column));
    if (v.empty()) {
      ++p.null_count;
    } else {
      ++counts[v];
    }
  }
  p.non_null_count = p.record_count - p.null_count;
  p.null_rate_pct = p.record_count ? 100.0 * static_cast<double>(p.null_count) / static_cast<double>(p.record_count) : 0.0;
  p.distinct_count = counts.size();

  std::vector<ValueCount> all;
  all.reserve(counts.size());
  for (const auto& [v, n] : counts) all.push_back({std::string(v), n});
  std::sort(all.begin(), all.end(), by_count_desc);

  p.inferred_type = infer_type(all, options);

  const auto& tokens = default_placeholder_tokens();
  std::optional<std::size_t> digits;
  bool uniform = true;
  for (const auto& vc : all) {
    if (check_placeholder(vc.value, tokens)) {
      p.placeholder_hits += vc.count;
      p.placeholder_values.push_back(vc);
      continue;
    }
    if (!all_digits(vc.value) || (digits && *digits != vc.value.size())) {
      uniform = false;
    } else {
      digits = vc.value.size();
    }
  }
  if (uniform && digits) p.uniform_digits = digits;

  p.top_values.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min(options.top_n, all.size())));
  if (all.size() <= options.keep_values) p.value_counts = std::move(all);
  if (auto e = suggest_enum(p, options.max_distinct, options.min_support)) p.enum_candidate = e->members;
  return p;
}

std::vector<FieldProfile> profile_dataset_serial(const Dataset& ds, const ProfileOptions& options) {
  std::vector<FieldProfile> out;
  for (std::size_t c = 0; c < ds.column_count(); ++c) out.push_back(profile_column(ds, c, options));
  return out;
}

std::vector<FieldProfile> profile_dataset(const Dataset& ds, const ProfileOptions& options) {
  std::vector<FieldProfile> out(ds.column_count());
  const auto columns = static_cast<std::int64_t>(ds.column_count());
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t c = 0; c < columns; ++c) {
    out[static_cast<std::size_t>(c)] = profile_column(ds, static_cast<std::size_t>(c), options);
  }
  return out;
}

Nullability suggest_nullability(const FieldProfile& profile, double threshold_pct) {
  if (profile.record_count == 0) return Nullability::nullable;
  return profile.null_rate_pct < threshold_pct ? Nullability::not_null : Nullability::nullable;
}

std::optional<EnumSuggestion> suggest_enum(const FieldProfile& profile, std::size_t max_distinct,
                                           std::size_t min_support) {
  const std::size_t real_distinct = profile.distinct_count - profile.placeholder_values.size();
  if (real_distinct == 0 || real_distinct > max_distinct) return std::nullopt;
  if (profile.value_counts.size() != profile.distinct_count) return std::nullopt;
  EnumSuggestion s;
  const auto& tokens = default_placeholder_tokens();
  for (const auto& vc : profile.value_counts) {
    if (check_placeholder(vc.value, tokens)) continue;
    if (vc.count >= min_support) {
      s.members.push_back(vc.value);
    } else {
      s.rare.push_back(vc);
    }
  }
  if (s.members.empty()) return std::nullopt;
  std::sort(s.members.begin(), s.members.end());
  std::sort(s.rare.begin(), s.rare.end(), [](const ValueCount& a, const ValueCount& b) {
    return a.count != b.count ? a.count < b.count : a.value < b.value;
  });
  return s;
}

}  // namespace odq
