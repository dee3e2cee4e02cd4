#include "odq/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "odq/dataset.hpp"
#include "odq/engine.hpp"
#include "odq/profiler.hpp"
#include "odq/report.hpp"
#include "odq/spec_dsl.hpp"

namespace odq::cli {

namespace fs = std::filesystem;

namespace {

struct IoFailure {
  std::string message;
};

struct SpecFailure {};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoFailure{"cannot read " + path};
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure{"cannot write " + path};
  out << text;
  out.flush();
  if (!out) throw IoFailure{"cannot write " + path};
}

struct LoadedSpec {
  std::string path;
  QualitySpec spec;
};

// Parses every spec file; reports all diagnostics and throws SpecFailure when
// any file has errors or object names collide across files.
std::vector<LoadedSpec> load_specs(const std::vector<std::string>& paths, std::ostream& err) {
  std::vector<LoadedSpec> out;
  bool failed = false;
  for (const auto& path : paths) {
    std::string text = read_text(path);
    try {
      QualitySpec spec = parse_spec(text);
      for (const auto& d : check_spec_semantics(spec)) err << d.format(path) << "\n";
      out.push_back({path, std::move(spec)});
    } catch (const SpecError& e) {
      for (const auto& d : e.diagnostics()) err << d.format(path) << "\n";
      failed = true;
    }
  }
  std::map<std::string, std::string> owners;
  for (const auto& ls : out) {
    for (const auto& obj : ls.spec.objects) {
      auto [it, fresh] = owners.emplace(obj.name, ls.path);
      if (!fresh) {
        err << ls.path << ":" << obj.loc.line << ":" << obj.loc.column << ": error: object '" << obj.name
            << "' is already defined in " << it->second << "\n";
        failed = true;
      }
    }
  }
  if (failed) throw SpecFailure{};
  return out;
}

struct Binding {
  const DataObjectClass* object;
  const QualitySpec* spec;
  std::string data_path;
};

bool same_file_name(const std::string& data_path, const std::string& hint) {
  return fs::path(data_path).filename() == fs::path(hint).filename();
}

std::vector<Binding> bind_objects(const std::vector<LoadedSpec>& specs, const RunConfig& cfg, std::ostream& err) {
  std::vector<Binding> todo;
  for (const auto& ls : specs) {
    for (const auto& obj : ls.spec.objects) todo.push_back({&obj, &ls.spec, {}});
  }
  bool failed = false;
  for (const auto& b : cfg.binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == b.size()) {
      err << "error: --bind expects OBJECT=PATH, got '" << b << "'\n";
      failed = true;
      continue;
    }
    std::string name = b.substr(0, eq);
    auto it = std::find_if(todo.begin(), todo.end(), [&](const Binding& x) { return x.object->name == name; });
    if (it == todo.end()) {
      err << "error: --bind names unknown object '" << name << "'\n";
      failed = true;
    } else if (!it->data_path.empty()) {
      err << "error: object '" << name << "' is bound more than once\n";
      failed = true;
    } else {
      it->data_path = b.substr(eq + 1);
    }
  }
  if (failed) throw SpecFailure{};

  std::set<std::string> used;
  for (const auto& b : todo) {
    if (!b.data_path.empty()) used.insert(b.data_path);
  }
  for (auto& b : todo) {
    if (!b.data_path.empty() || b.object->source_hint.empty()) continue;
    std::vector<std::string> hits;
    for (const auto& d : cfg.data_paths) {
      if (same_file_name(d, b.object->source_hint)) hits.push_back(d);
    }
    if (hits.size() > 1) {
      err << "error: several data files match source '" << b.object->source_hint << "' of object '" << b.object->name
          << "'; use --bind\n";
      failed = true;
    } else if (hits.size() == 1) {
      b.data_path = hits.front();
      used.insert(b.data_path);
    }
  }
  if (failed) throw SpecFailure{};

  std::vector<Binding*> unbound;
  for (auto& b : todo) {
    if (b.data_path.empty()) unbound.push_back(&b);
  }
  std::vector<std::string> unused;
  for (const auto& d : cfg.data_paths) {
    if (!used.count(d)) unused.push_back(d);
  }
  if (unbound.size() == 1 && unused.size() == 1) {
    unbound.front()->data_path = unused.front();
    unused.clear();
  } else {
    for (const auto* b : unbound) {
      err << "error: cannot decide which data file object '" << b->object->name << "' describes; use --bind\n";
      failed = true;
    }
  }
  if (failed) throw SpecFailure{};
  for (const auto& d : unused) err << "warning: data file " << d << " is not bound to any object\n";
  return todo;
}

bool fails(Severity s, const RunConfig& cfg) { return cfg.fail_on && severity_rank(s) >= severity_rank(*cfg.fail_on); }

std::string protocol_text(const std::vector<EvaluationResult>& results, const std::string& path) {
  ErrorProtocol all;
  for (const auto& r : results) {
    all.violations.insert(all.violations.end(), r.protocol.violations.begin(), r.protocol.violations.end());
  }
  if (fs::path(path).extension() == ".csv") return protocol_to_csv(all);
  return protocol_to_jsonl(all);
}

std::string report_text(const std::vector<SummaryReport>& reports, const std::vector<Binding>& bindings,
                        ReportFormat format) {
  std::string out;
  switch (format) {
    case ReportFormat::markdown:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += "\n";
        out += render_markdown(reports[i], *bindings[i].spec);
      }
      break;
    case ReportFormat::csv:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out += "\n";
        out += render_csv(reports[i]);
      }
      break;
    case ReportFormat::json:
      if (reports.size() == 1) {
        out = render_json(reports.front());
      } else {
        nlohmann::ordered_json root;
        root["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) root["reports"].push_back(nlohmann::ordered_json::parse(render_json(r)));
        out = root.dump(2) + "\n";
      }
      break;
  }
  return out;
}

std::string object_name_for(const std::string& path) {
  std::string stem = fs::path(path).stem().string();
  std::string out;
  for (char c : stem) {
    auto u = static_cast<unsigned char>(c);
    bool ok = (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || (u >= '0' && u <= '9') || u == '_' || u >= 0x80;
    out.push_back(ok ? c : '_');
  }
  if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out.insert(out.begin(), '_');
  return out;
}

}  // namespace

std::optional<char> parse_delimiter(std::string_view text) {
  if (text == "tab" || text == "\\t" || text == "\t") return '\t';
  if (text.size() == 1 && text[0] != '"' && text[0] != '\n' && text[0] != '\r') return text[0];
  return std::nullopt;
}

int run_check_spec(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto specs = load_specs(cfg.spec_paths, err);
    for (const auto& ls : specs) out << ls.path << ": ok (" << ls.spec.objects.size() << (ls.spec.objects.size() == 1 ? " object)\n" : " objects)\n");
    return kExitOk;
  } catch (const SpecFailure&) {
    return kExitSpecError;
  } catch (const IoFailure& e) {
    err << "error: " << e.message << "\n";
    return kExitIoError;
  }
}

int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto specs = load_specs(cfg.spec_paths, err);
    auto bindings = bind_objects(specs, cfg, err);

    CsvOptions csv;
    csv.delimiter = cfg.delimiter;
    std::map<std::string, Dataset> data;
    for (const auto& b : bindings) {
      if (!data.count(b.data_path)) data.emplace(b.data_path, read_csv(b.data_path, csv));
    }
    for (const auto& b : bindings) {
      try {
        CompiledObject probe(*b.object, data.at(b.data_path).header());
      } catch (const BindingError& e) {
        err << b.data_path << ": error: " << e.what() << "\n";
        throw SpecFailure{};
      }
    }

    EvaluateOptions eo;
    eo.workers = cfg.workers;
    eo.anomaly_k = cfg.anomaly_k;
    std::vector<EvaluationResult> results;
    std::vector<SummaryReport> reports;
    for (const auto& b : bindings) {
      results.push_back(evaluate_dataset(data.at(b.data_path), *b.object, eo));
      reports.push_back(make_summary(results.back()));
    }

    if (!cfg.out_protocol.empty()) write_text(cfg.out_protocol, protocol_text(results, cfg.out_protocol));
    std::string report = report_text(reports, bindings, cfg.format);
    if (cfg.out_report.empty()) {
      out << report;
    } else {
      write_text(cfg.out_report, report);
    }

    bool failing = false;
    for (const auto& r : results) {
      for (const auto& v : r.protocol.violations) failing = failing || fails(v.severity, cfg);
      for (const auto& o : r.collection_outcomes) {
        Severity s = o.metric == Metric::frequency_min ? Severity::anomaly : Severity::error;
        if (!o.passed) {
          err << "expectation " << o.rule_name << " of object " << r.object_name << " failed\n";
          failing = failing || fails(s, cfg);
        }
      }
    }
    return failing ? kExitViolations : kExitOk;
  } catch (const SpecFailure&) {
    return kExitSpecError;
  } catch (const IoFailure& e) {
    err << "error: " << e.message << "\n";
    return kExitIoError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  }
}

int run_profile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    CsvOptions csv;
    csv.delimiter = cfg.delimiter;
    ProfileOptions po;
    po.workers = cfg.workers;
    std::string spec = "# draft specification, suggestions only: review before use\nversion 1;\n";
    nlohmann::ordered_json profiles = nlohmann::ordered_json::array();
    std::set<std::string> names;
    for (const auto& path : cfg.data_paths) {
      Dataset ds = read_csv(path, csv);
      if (ds.record_count() == 0) err << "warning: " << path << " has no records; every field is drafted as nullable text\n";
      auto profile = profile_dataset(ds, po);
      DraftOptions d;
      d.source_name = fs::path(path).filename().string();
      std::string name = object_name_for(path);
      for (int k = 2; !names.insert(name).second; ++k) name = object_name_for(path) + "_" + std::to_string(k);
      spec += "\n# " + d.source_name + ": " + std::to_string(ds.record_count()) + " records\n";
      spec += generate_draft_object(profile, name, d);
      profiles.push_back(nlohmann::ordered_json::parse(profile_to_json(profile, d.source_name)));
    }
    if (!cfg.out_report.empty()) {
      std::string json = profiles.size() == 1 ? profiles.front().dump(2) : nlohmann::ordered_json{{"profiles", profiles}}.dump(2);
      write_text(cfg.out_report, json + "\n");
    }
    if (cfg.out_spec.empty()) {
      out << spec;
    } else {
      write_text(cfg.out_spec, spec);
    }
    return kExitOk;
  } catch (const IoFailure& e) {
    err << "error: " << e.message << "\n";
    return kExitIoError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Declarative data quality checks for delimited files", "odq"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string delimiter = ",";
  std::string format = "markdown";
  std::string fail_on = "error";
  std::size_t anomaly_k = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--data", cfg.data_paths, "Data file (CSV)");
    sub->add_option("--delimiter", delimiter, "Field delimiter: one character or 'tab'");
    sub->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check data files against quality specifications");
  common(validate);
  validate->add_option("--spec", cfg.spec_paths, "Specification file (.dq)")->required();
  validate->get_option("--data")->required();
  validate->add_option("--bind", cfg.binds, "Bind an object to a data file: OBJECT=PATH");
  validate->add_option("--out-protocol", cfg.out_protocol, "Error protocol file (.csv for CSV, otherwise JSON Lines)");
  validate->add_option("--out-report", cfg.out_report, "Report file (default: standard output)");
  validate->add_option("--format", format, "Report format")->check(CLI::IsMember({"markdown", "csv", "json"}));
  auto* k_opt = validate->add_option("--anomaly-k", anomaly_k, "Flag values seen at most k times in every field");
  validate->add_option("--fail-on", fail_on, "Lowest severity that fails the run")
      ->check(CLI::IsMember({"error", "warning", "anomaly", "none"}));

  auto* profile = app.add_subcommand("profile", "Profile data files and draft a specification");
  common(profile);
  profile->get_option("--data")->required();
  profile->add_option("--out-spec", cfg.out_spec, "Draft specification file (default: standard output)");
  profile->add_option("--out-report", cfg.out_report, "JSON profile file");

  auto* check = app.add_subcommand("check-spec", "Parse and check specification files");
  check->add_option("--spec", cfg.spec_paths, "Specification file (.dq)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSpecError;
  }

  auto d = parse_delimiter(delimiter);
  if (!d) {
    err << "error: invalid delimiter '" << delimiter << "'\n";
    return kExitSpecError;
  }
  cfg.delimiter = *d;
  cfg.format = format == "csv" ? ReportFormat::csv : format == "json" ? ReportFormat::json : ReportFormat::markdown;
  cfg.fail_on = fail_on == "none" ? std::nullopt : parse_severity(fail_on);
  if (k_opt->count() > 0) cfg.anomaly_k = anomaly_k;

  if (validate->parsed()) {
    cfg.command = Command::validate;
    return run_validate(cfg, out, err);
  }
  if (profile->parsed()) {
    cfg.command = Command::profile;
    return run_profile(cfg, out, err);
  }
  cfg.command = Command::check_spec;
  return run_check_spec(cfg, out, err);
}

}  // namespace odq::cli
