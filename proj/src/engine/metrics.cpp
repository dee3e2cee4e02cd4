#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "engine/internal.hpp"

namespace odq {

double error_rate(std::size_t error_count, std::size_t total) {
  if (total == 0) return 0.0;
  return 100.0 * static_cast<double>(error_count) / static_cast<double>(total);
}

namespace {

using u128 = unsigned __int128;

// round_half_up(num / den)
std::uint64_t div_half_up(u128 num, u128 den) { return static_cast<std::uint64_t>((2 * num + den) / (2 * den)); }

std::string fixed(std::uint64_t units, int decimals) {
  std::uint64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  std::string frac = std::to_string(units % scale);
  frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
  return std::to_string(units / scale) + "." + frac;
}

}  // namespace

std::string format_rate(std::size_t error_count, std::size_t total) {
  if (total == 0 || error_count == 0) return "0";
  const u128 e = error_count;
  const u128 t = total;
  if (e * 10000 < t) return fixed(div_half_up(e * 1000000, t), 4);
  return fixed(div_half_up(e * 10000, t), 2);
}

AffectedColumns affected_columns(const std::vector<FieldReport>& reports) {
  AffectedColumns a;
  a.total = reports.size();
  a.count = static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const FieldReport& r) { return r.records_with_error > 0; }));
  if (a.total > 0) a.fraction_pct = static_cast<double>(div_half_up(u128(a.count) * 1000, a.total)) / 10.0;
  return a;
}

bool compare_values(double lhs, CompareOp op, double rhs) {
  switch (op) {
    case CompareOp::eq: return lhs == rhs;
    case CompareOp::ne: return lhs != rhs;
    case CompareOp::lt: return lhs < rhs;
    case CompareOp::le: return lhs <= rhs;
    case CompareOp::gt: return lhs > rhs;
    case CompareOp::ge: return lhs >= rhs;
  }
  return false;
}

namespace {

using Counts = std::unordered_map<std::string_view, std::size_t>;

Counts count_values(const Dataset& ds, std::size_t column) {
  Counts counts;
  for (std::size_t row = 0; row < ds.record_count(); ++row) {
    std::string_view v = trim(ds.raw(row, column));
    if (!v.empty()) ++counts[v];
  }
  return counts;
}

std::vector<Anomaly> rare_values(const Counts& counts, const std::string& field, std::size_t k) {
  std::vector<Anomaly> out;
  for (const auto& [value, n] : counts) {
    if (n <= k) out.push_back({field, std::string(value), n});
  }
  std::sort(out.begin(), out.end(), [](const Anomaly& a, const Anomaly& b) {
    return a.count != b.count ? a.count < b.count : a.value < b.value;
  });
  return out;
}

}  // namespace

std::vector<Anomaly> frequency_anomalies(const Dataset& dataset, std::string_view field, std::size_t k) {
  auto column = dataset.column_index(field);
  if (!column) throw BindingError("unknown column '" + std::string(field) + "'");
  return rare_values(count_values(dataset, *column), std::string(field), k);
}

namespace engine {

Partial make_partial(std::size_t fields) {
  Partial p;
  p.nulls.assign(fields, 0);
  p.placeholders.assign(fields, 0);
  p.placeholder_values.resize(fields);
  return p;
}

void tally(const CompiledObject::Impl& impl, const RecordView& r, Partial& p) {
  for (std::size_t i = 0; i < impl.fields.size(); ++i) {
    const auto& bf = impl.fields[i];
    std::string_view v = r.value(bf.column);
    if (v.empty()) {
      ++p.nulls[i];
      continue;
    }
    const auto& tokens = bf.placeholders.empty() ? default_placeholder_tokens() : bf.placeholders;
    if (check_placeholder(v, tokens)) {
      ++p.placeholders[i];
      ++p.placeholder_values[i][std::string(v)];
    }
  }
}

namespace {

// Largest occurrence count that still violates `frequency_min op threshold`.
std::optional<std::size_t> rare_limit(const CollectionRule& c) {
  const auto t = static_cast<std::size_t>(c.threshold);
  if (c.op == CompareOp::gt) return t;
  if (t == 0) return std::nullopt;
  return t - 1;
}

struct FrequencyScan {
  std::size_t field;
  std::string rule;
  std::size_t k;
};

}  // namespace

EvaluationResult finish(const Dataset& ds, const CompiledObject& compiled, Partial merged,
                        const EvaluateOptions& options) {
  const auto& impl = compiled.impl();
  const DataObjectClass& obj = compiled.object();
  const std::size_t total = ds.record_count();
  EvaluationResult res;
  res.object_name = obj.name;
  res.records_total = total;

  auto field_index = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < impl.fields.size(); ++i) {
      if (impl.fields[i].spec->name == name) return i;
    }
    return std::nullopt;
  };

  std::vector<FrequencyScan> scans;
  for (const auto& c : obj.collection_rules) {
    if (c.metric != Metric::frequency_min) continue;
    if (auto k = rare_limit(c)) scans.push_back({*field_index(c.target), c.name, *k});
  }
  if (options.anomaly_k && *options.anomaly_k > 0) {
    for (std::size_t i = 0; i < impl.fields.size(); ++i) scans.push_back({i, std::string(kFrequencyRule), *options.anomaly_k});
  }

  std::map<std::size_t, Counts> counts;
  auto counts_for = [&](std::size_t field) -> const Counts& {
    auto it = counts.find(field);
    if (it == counts.end()) it = counts.emplace(field, count_values(ds, impl.fields[field].column)).first;
    return it->second;
  };

  std::set<std::pair<std::size_t, std::string>> seen_anomalies;
  std::vector<std::pair<std::size_t, Anomaly>> anomalies;
  for (const auto& scan : scans) {
    const auto& bf = impl.fields[scan.field];
    auto rare = rare_values(counts_for(scan.field), bf.spec->name, scan.k);
    if (rare.empty()) continue;
    std::unordered_map<std::string_view, std::size_t> lookup;
    for (const auto& a : rare) {
      lookup.emplace(a.value, a.count);
      if (seen_anomalies.insert({scan.field, a.value}).second) anomalies.push_back({scan.field, a});
    }
    for (std::size_t row = 0; row < total; ++row) {
      std::string_view raw = ds.raw(row, bf.column);
      auto it = lookup.find(trim(raw));
      if (it == lookup.end()) continue;
      merged.violations.push_back({obj.name, row + 1, bf.spec->name, scan.rule, Severity::anomaly, std::string(raw),
                                   "value occurs " + std::to_string(it->second) + " times"});
    }
  }
  std::stable_sort(anomalies.begin(), anomalies.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.count != b.second.count ? a.second.count < b.second.count : a.second.value < b.second.value;
  });
  for (auto& a : anomalies) res.anomalies.push_back(std::move(a.second));

  std::sort(merged.violations.begin(), merged.violations.end(), protocol_less);

  res.field_reports.resize(impl.fields.size());
  std::map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < impl.fields.size(); ++i) {
    auto& fr = res.field_reports[i];
    const FieldSpec& f = *impl.fields[i].spec;
    fr.field_name = f.name;
    fr.requirement = requirement_summary(f);
    fr.records_total = total;
    fr.null_count = merged.nulls[i];
    fr.placeholder_count = merged.placeholders[i];
    fr.placeholder_values = std::move(merged.placeholder_values[i]);
    by_name[f.name] = i;
  }
  std::map<std::string, std::size_t> rule_hits;
  std::vector<std::size_t> last_error_row(impl.fields.size(), 0);
  for (const auto& v : merged.violations) {
    if (v.field_name.empty()) {
      ++rule_hits[v.rule_name];
      continue;
    }
    const std::size_t i = by_name.at(v.field_name);
    auto& fr = res.field_reports[i];
    auto& rc = fr.breakdown[v.rule_name];
    ++rc.count;
    rc.severity = v.severity;
    if (v.severity == Severity::error && last_error_row[i] != v.row_index) {
      last_error_row[i] = v.row_index;
      ++fr.records_with_error;
    }
  }
  for (auto& fr : res.field_reports) {
    fr.error_rate_pct = error_rate(fr.records_with_error, total);
    for (auto& [name, rc] : fr.breakdown) rc.rate_pct = error_rate(rc.count, total);
  }
  for (const auto& r : obj.record_rules) {
    const std::size_t n = rule_hits[r.name];
    res.rule_reports.push_back({r.name, r.severity, n, error_rate(n, total)});
  }

  for (const auto& c : obj.collection_rules) {
    CollectionOutcome o{c.name, c.metric, c.target, c.op, 0.0, c.threshold, true};
    auto fi = field_index(c.target);
    bool vacuous = total == 0;
    switch (c.metric) {
      case Metric::error_rate:
        if (fi) {
          o.metric_value = res.field_reports[*fi].error_rate_pct;
        } else {
          o.metric_value = error_rate(rule_hits[c.target], total);
        }
        break;
      case Metric::null_rate:
        o.metric_value = error_rate(res.field_reports[*fi].null_count, total);
        break;
      case Metric::frequency_min: {
        const auto& cnt = counts_for(*fi);
        vacuous = cnt.empty();
        std::size_t lowest = 0;
        for (const auto& [value, n] : cnt) lowest = lowest == 0 ? n : std::min(lowest, n);
        o.metric_value = static_cast<double>(lowest);
        break;
      }
    }
    o.passed = vacuous || compare_values(o.metric_value, c.op, c.threshold);
    res.collection_outcomes.push_back(std::move(o));
  }

  res.protocol.violations = std::move(merged.violations);
  return res;
}

}  // namespace engine

}  // namespace odq
