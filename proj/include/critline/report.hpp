#pragma once

// Verification records: one entry per checked identity, with both sides,
// the tolerance, the estimated truncation tail and the verdict
//     pass  <=>  |lhs - rhs| <= tolerance + tail.

#include <filesystem>
#include <string>
#include <vector>

#include "critline/errors.hpp"

namespace critline {

struct ReportEntry {
  std::string check_id;
  ComplexValue lhs{};
  ComplexValue rhs{};
  double abs_diff = 0.0;
  double tolerance = 0.0;
  double tail = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string note;
};

/// Builds an entry, computing abs_diff and pass from the other fields.
ReportEntry make_entry(std::string check_id, ComplexValue lhs, ComplexValue rhs,
                       double tolerance, double tail, double seconds = 0.0,
                       std::string note = {});

/// Entry for a check that could not be evaluated (pass = false, NaN sides).
ReportEntry failed_entry(std::string check_id, double tolerance, std::string note);

struct VerificationReport {
  std::vector<ReportEntry> entries;

  void add(ReportEntry e) { entries.push_back(std::move(e)); }
  void add(const std::vector<ReportEntry>& es) { entries.insert(entries.end(), es.begin(), es.end()); }
  bool all_pass() const;
  std::size_t failures() const;
};

/// Complex values are written as `re` when purely real, else `re+imi`.
std::string format_value(ComplexValue z);

/// Columns: check_id,lhs,rhs,abs_diff,tolerance,tail,pass,seconds
void write_report_csv(const std::filesystem::path& path, const VerificationReport& report);
/// Array of objects with the same fields (complex values as [re, im]).
void write_report_json(const std::filesystem::path& path, const VerificationReport& report);

/// Wall-clock stopwatch for the `seconds` column.
class Stopwatch {
 public:
  Stopwatch();
  double seconds() const;

 private:
  double start_;
};

}  // namespace critline
