#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace bmdist::app {

struct ReportRow {
  std::string claim;
  double expected;
  double computed;
  double tolerance;
  bool pass;
  std::string note;
};

struct RunReport {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::vector<ReportRow> rows;
  long runtime_ms = 0;

  // |computed - expected| <= tolerance
  void add_exact(std::string claim, double expected, double computed, double tolerance, std::string note = {});
  // computed <= expected + tolerance
  void add_at_most(std::string claim, double bound, double computed, double tolerance, std::string note = {});
  // computed >= expected - tolerance
  void add_at_least(std::string claim, double bound, double computed, double tolerance, std::string note = {});
  // Count-valued claims (tolerance 0).
  void add_count(std::string claim, long expected, long computed);

  bool all_pass() const;
  void append(const RunReport& other);
};

// Numbers with 9 significant digits.
std::string format_number(double x);

// Line-oriented key: value output.
void print_text(std::ostream& out, const RunReport& report);
// One JSON record per row, then a summary record.
void print_json(std::ostream& out, const RunReport& report);

}  // namespace bmdist::app
