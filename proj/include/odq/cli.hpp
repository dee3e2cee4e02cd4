#pragma once

// Command-line workflows: validate, profile and check-spec.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "odq/spec.hpp"

namespace odq::cli {

enum class Command { validate, profile, check_spec };
enum class ReportFormat { markdown, csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitSpecError = 2;
inline constexpr int kExitIoError = 3;

struct RunConfig {
  Command command = Command::validate;
  std::vector<std::string> spec_paths;
  std::vector<std::string> data_paths;
  std::vector<std::string> binds;  // OBJECT=PATH
  char delimiter = ',';
  std::string out_protocol;
  std::string out_report;
  std::string out_spec;  // profile only
  ReportFormat format = ReportFormat::markdown;
  int workers = 0;
  std::optional<std::size_t> anomaly_k;
  std::optional<Severity> fail_on = Severity::error;  // nullopt: never fail
};

int run_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_profile(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_check_spec(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and dispatches. Usage errors exit with kExitSpecError.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "tab", "\t" or a single character.
std::optional<char> parse_delimiter(std::string_view text);

}  // namespace odq::cli
