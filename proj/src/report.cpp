#include "critline/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "json.hpp"

namespace critline {

ReportEntry make_entry(std::string check_id, ComplexValue lhs, ComplexValue rhs,
                       double tolerance, double tail, double seconds, std::string note) {
  ReportEntry e;
  e.check_id = std::move(check_id);
  e.lhs = lhs;
  e.rhs = rhs;
  e.abs_diff = std::abs(lhs - rhs);
  e.tolerance = tolerance;
  e.tail = tail;
  e.pass = std::isfinite(e.abs_diff) && e.abs_diff <= tolerance + tail;
  e.seconds = seconds;
  e.note = std::move(note);
  return e;
}

ReportEntry failed_entry(std::string check_id, double tolerance, std::string note) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ReportEntry e;
  e.check_id = std::move(check_id);
  e.lhs = e.rhs = ComplexValue(nan, nan);
  e.abs_diff = nan;
  e.tolerance = tolerance;
  e.pass = false;
  e.note = std::move(note);
  return e;
}

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.pass ? 0 : 1;
  return n;
}

std::string format_value(ComplexValue z) {
  char buf[80];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.15g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  }
  return buf;
}

void write_report_csv(const std::filesystem::path& path, const VerificationReport& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "check_id,lhs,rhs,abs_diff,tolerance,tail,pass,seconds\n";
  char buf[160];
  for (const auto& e : report.entries) {
    std::snprintf(buf, sizeof buf, "%.6e,%.3e,%.3e,%s,%.3f", e.abs_diff, e.tolerance, e.tail,
                  e.pass ? "true" : "false", e.seconds);
    out << e.check_id << ',' << format_value(e.lhs) << ',' << format_value(e.rhs) << ',' << buf
        << '\n';
  }
}

void write_report_json(const std::filesystem::path& path, const VerificationReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  auto num = [](double v) -> nlohmann::json {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  };
  for (const auto& e : report.entries) {
    nlohmann::json j;
    j["check_id"] = e.check_id;
    j["lhs"] = {num(e.lhs.real()), num(e.lhs.imag())};
    j["rhs"] = {num(e.rhs.real()), num(e.rhs.imag())};
    j["abs_diff"] = num(e.abs_diff);
    j["tolerance"] = e.tolerance;
    j["tail"] = num(e.tail);
    j["pass"] = e.pass;
    j["seconds"] = e.seconds;
    if (!e.note.empty()) j["note"] = e.note;
    arr.push_back(std::move(j));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << arr.dump(2) << '\n';
}

namespace {
double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}
}  // namespace

Stopwatch::Stopwatch() : start_(now_seconds()) {}
double Stopwatch::seconds() const { return now_seconds() - start_; }

}  // namespace critline
