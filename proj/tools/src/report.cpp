#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "json.hpp"

namespace bmdist::app {

void RunReport::add_exact(std::string claim, double expected, double computed, double tolerance, std::string note) {
  const bool pass = std::abs(computed - expected) <= tolerance;
  rows.push_back({std::move(claim), expected, computed, tolerance, pass, std::move(note)});
}

void RunReport::add_at_most(std::string claim, double bound, double computed, double tolerance, std::string note) {
  const bool pass = computed <= bound + tolerance;
  rows.push_back({std::move(claim), bound, computed, tolerance, pass, std::move(note)});
}

void RunReport::add_at_least(std::string claim, double bound, double computed, double tolerance, std::string note) {
  const bool pass = computed >= bound - tolerance;
  rows.push_back({std::move(claim), bound, computed, tolerance, pass, std::move(note)});
}

void RunReport::add_count(std::string claim, long expected, long computed) {
  rows.push_back({std::move(claim), static_cast<double>(expected), static_cast<double>(computed), 0.0,
                  expected == computed, {}});
}

bool RunReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

void RunReport::append(const RunReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  runtime_ms += other.runtime_ms;
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  return fmt::format("{:.9g}", x);
}

void print_text(std::ostream& out, const RunReport& report) {
  out << "command: " << report.command << '\n';
  for (const auto& [key, value] : report.inputs) out << "input." << key << ": " << value << '\n';
  for (const auto& row : report.rows) {
    out << (row.pass ? "PASS" : "FAIL") << ": " << row.claim << " | expected: " << format_number(row.expected)
        << " | computed: " << format_number(row.computed) << " | tolerance: " << format_number(row.tolerance);
    if (!row.note.empty()) out << " | note: " << row.note;
    out << '\n';
  }
  const auto passed = std::count_if(report.rows.begin(), report.rows.end(), [](const ReportRow& r) { return r.pass; });
  out << "passed: " << passed << "/" << report.rows.size() << '\n';
  out << "runtime_ms: " << report.runtime_ms << '\n';
}

namespace {

// JSON number carrying at most 9 significant digits.
double rounded(double x) { return std::stod(format_number(x)); }

}  // namespace

void print_json(std::ostream& out, const RunReport& report) {
  using nlohmann::json;
  for (const auto& row : report.rows) {
    json record = {{"command", report.command},
                   {"claim", row.claim},
                   {"expected", rounded(row.expected)},
                   {"computed", rounded(row.computed)},
                   {"tolerance", rounded(row.tolerance)},
                   {"pass", row.pass}};
    if (!row.note.empty()) record["note"] = row.note;
    out << record.dump() << '\n';
  }
  json summary = {{"command", report.command},
                  {"inputs", report.inputs},
                  {"rows", report.rows.size()},
                  {"pass", report.all_pass()},
                  {"runtime_ms", report.runtime_ms}};
  out << summary.dump() << '\n';
}

}  // namespace bmdist::app
