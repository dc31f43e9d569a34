#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qcoh/exact.hpp"
#include "qcoh/qring.hpp"

namespace qcoh {

struct ReportRow {
  std::vector<long> key;
  Int value;
  bool operator==(const ReportRow&) const = default;
};

/// Result of one command: rows of (key, integer) and named checks.
struct Report {
  std::string model;
  std::string command;
  std::map<std::string, long> bounds;
  std::vector<ReportRow> rows;
  std::vector<Check> checks;

  bool ok() const;
  void sort_rows();
  bool operator==(const Report&) const = default;
};

std::string to_json(const Report& r);
/// Throws std::invalid_argument on malformed input.
Report report_from_json(const std::string& text);
std::string to_csv(const Report& r);
std::string to_text(const Report& r);

/// Header names of the key columns for a report.
std::vector<std::string> key_columns(const Report& r);

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

/// Entry point of the command-line tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcoh
