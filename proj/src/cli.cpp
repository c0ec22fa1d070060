#include "critline/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <regex>
#include <set>
#include <stdexcept>

#include "critline/line_integrals.hpp"
#include "critline/special_fn.hpp"
#include "critline/zeta.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNearOne = 1.0 + 1e-8;

std::string fmt(double v) { return format_value(ComplexValue(v)); }

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::filesystem::path sieve_path(const RunConfig& cfg) {
  return cfg.output_dir / ("sieve_" + std::to_string(cfg.sieve_limit) + ".bin");
}

// Sign-condition record: lhs holds the violation (0 when the condition holds).
ReportEntry condition_entry(std::string id, double value, bool ok, std::string note) {
  const double violation = ok ? 0.0 : std::max(std::abs(value), std::numeric_limits<double>::min());
  return make_entry(std::move(id), violation, 0.0, 0.0, 0.0, 0.0, std::move(note));
}

template <class F>
void guarded(VerificationReport& rep, const std::string& id, double tol, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    rep.add(failed_entry(id, tol, e.what()));
  }
}

// ---------------------------------------------------------------------------
// Suites

void suite_thm22(Workspace& ws, const CheckParams& p, VerificationReport& rep) {
  const QuadratureSpec q = ws.quad();
  const std::vector<ComplexValue> kernel_s =
      p.s.empty() ? std::vector<ComplexValue>{2.0, 3.0, {1.5, 1.0}} : p.s;
  for (const auto& s : kernel_s) {
    rep.add(gamma_kernel_identity(s, q));
    rep.add(atan_kernel_identity(s, q));
  }
  const std::vector<ComplexValue> zc_s = p.s.empty() ? std::vector<ComplexValue>{2.0, {1.5, 3.0}} : p.s;
  for (const auto& s : zc_s) {
    const std::string id = "thm22.zetaC@s=" + format_value(s);
    guarded(rep, id, 5e-3, [&] {
      Stopwatch sw;
      const auto zc = zeta_C_eval(s, q, ws.zeros());
      const ComplexValue z = zeta(s);
      // lhs/rhs scaled by 1/zeta(s): abs_diff is the relative error.
      rep.add(make_entry(id, zc.value / z, (s - 1.0) / s, 5e-3, zc.tail / std::abs(z), sw.seconds()));
    });
  }
  const std::vector<ComplexValue> zb_s = p.s.empty() ? std::vector<ComplexValue>{2.0} : p.s;
  for (const auto& s : zb_s) {
    const std::string id = "thm22.zetaB@s=" + format_value(s);
    guarded(rep, id, 5e-3, [&] {
      Stopwatch sw;
      const auto zb = zeta_B_eval(s, q, ws.cache());
      rep.add(make_entry(id, zb.value, (s - 1.0) / s * zeta(s), 5e-3, zb.tail, sw.seconds()));
    });
  }
}

void suite_cor23(Workspace& ws, const CheckParams& p, VerificationReport& rep) {
  const QuadratureSpec q = ws.quad();
  std::vector<ComplexValue> ss = p.s.empty() ? std::vector<ComplexValue>{2.0, 1.0} : p.s;
  for (const auto& s : ss) {
    const std::string id = "cor23.xi@s=" + format_value(s);
    guarded(rep, id, 2e-3, [&] {
      Stopwatch sw;
      const auto v = xi_poisson(s, q, ws.zeros());
      rep.add(make_entry(id, v.value, xi(s), 2e-3, v.tail, sw.seconds()));
    });
  }
}

void suite_thm24(Workspace& ws, const CheckParams&, VerificationReport& rep) {
  const QuadratureSpec q = ws.quad();
  const double g1 = kEulerGamma - 1.0;
  guarded(rep, "thm24.j1", 5e-3, [&] {
    Stopwatch sw;
    const J1J2 j = j1_j2(q, ws.cache(), ws.zeros());
    const double secs = sw.seconds();
    rep.add(make_entry("thm24.j1", j.j1.value, g1, 5e-3, j.j1.tail, secs));
    rep.add(make_entry("thm24.j2", j.j2.value, g1, 5e-3, j.j2.tail, secs));
    rep.add(make_entry("thm24.j2_minus_j1", j.j2.value, j.j1.value, 1e-2, j.j1.tail + j.j2.tail, secs));
    rep.add(condition_entry("thm24.j1_le_gamma_minus_1", j.j1.value - g1,
                            j.j1.value <= g1 + 5e-3 + j.j1.tail, "J1=" + fmt(j.j1.value)));
    rep.add(condition_entry("thm24.j2_ge_gamma_minus_1", j.j2.value - g1,
                            j.j2.value >= g1 - 5e-3 - j.j2.tail, "J2=" + fmt(j.j2.value)));
  });
  guarded(rep, "thm24.omega", 5e-3, [&] {
    Stopwatch sw;
    const auto om = omega_zeta(q, ws.cache());
    const auto whole = omega_zeta_whole_line(q, ws.cache());
    const double secs = sw.seconds();
    rep.add(make_entry("thm24.omega", om.value, 0.0, 5e-3, om.tail, secs));
    rep.add(condition_entry("thm24.omega_nonnegative", om.value, om.value >= -om.tail,
                            "Omega=" + fmt(om.value)));
    rep.add(make_entry("thm24.omega_folding", whole.value, om.value, 1e-12, 0.0, secs));
  });
  if (!ws.synthetic().empty()) rep.add(balance_check(q, ws.synthetic()));
}

void suite_thm25(Workspace& ws, const CheckParams& p, VerificationReport& rep) {
  const std::vector<double> ts = p.t.empty() ? std::vector<double>{20.0, 30.0, 50.0} : p.t;
  for (double t : ts) rep.add(decomposition_check(t, ws.quad(), ws.cache(), ws.zeros(), ws.synthetic()));
}

std::vector<ReportEntry> mellin_subset(Workspace& ws, const CheckParams& p,
                                       const std::set<std::string>& ids) {
  std::vector<ComplexValue> ss = p.s.empty() ? std::vector<ComplexValue>{2.0} : p.s;
  const std::uint64_t X = std::min<std::uint64_t>(1000000, ws.config().sieve_limit);
  std::vector<ReportEntry> out;
  for (const auto& s : ss) {
    for (auto& e : mellin_checks(s, X, ws.sieve())) {
      if (ids.count(e.check_id.substr(0, e.check_id.find('@')))) out.push_back(std::move(e));
    }
  }
  return out;
}

void suite_thm31(Workspace& ws, const CheckParams& p, VerificationReport& rep) {
  rep.add(mellin_subset(ws, p, {"thm31a", "thm31b", "thm31c", "phimellin"}));
}

void suite_thm32(Workspace& ws, const CheckParams& p, VerificationReport& rep) {
  rep.add(mellin_subset(ws, p, {"zetapi", "zetapsi", "zetap1", "zetap2"}));
}

void x_limit_records(Workspace& ws, bool cosine, VerificationReport& rep) {
  QuadratureSpec q = ws.quad();
  const SyntheticZeroSet& zs = ws.synthetic();
  if (!cosine) {
    guarded(rep, "thm33a.limit_x1", 1e-3, [&] {
      Stopwatch sw;
      const auto v = f11(kNearOne, q, ws.zeros());
      rep.add(make_entry("thm33a.limit_x1", v.value, 0.0, 1e-3, v.tail, sw.seconds()));
    });
  } else {
    guarded(rep, "thm33b.limit_x1", 1e-6, [&] {
      Stopwatch sw;
      const auto v = f21(kNearOne, q, ws.cache());
      const auto om = omega_zeta(q, ws.cache());
      rep.add(make_entry("thm33b.limit_x1", v.value, -2.0 * om.value, 1e-6, 0.0, sw.seconds()));
    });
  }
  if (!zs.empty()) {
    // Limits of the zero sums as x -> 1+ on the synthetic set.
    if (!cosine) {
      rep.add(make_entry("thm33a.f12_limit_x1", f12_sum(kNearOne, zs), 0.0, 1e-6, 0.0));
      rep.add(make_entry("thm33a.f12_imag", f12_sum_complex(10.0, zs).imag(), 0.0, 1e-10, 0.0));
    } else {
      rep.add(make_entry("thm33b.f22_limit_x1", f22_sum(kNearOne, zs), 2.0 * blaschke_omega(zs), 1e-6, 0.0));
      rep.add(make_entry("thm33b.f22_imag", f22_sum_complex(10.0, zs).imag(), 0.0, 1e-10, 0.0));
    }
  }
}

std::vector<double> default_xs(const CheckParams& p) {
  return p.x.empty() ? std::vector<double>{std::exp(1.0), 10.0, 50.0} : p.x;
}

// The main f* records concern zeta itself, which has no zeros off
// the line at desk heights; a synthetic set enters only through the
// consistency records of x_limit_records.
void suite_thm33a(Workspace& ws, const CheckParams& p, VerificationReport& rep) {
  QuadratureSpec q = ws.quad();
  q.osc_split = true;
  for (double x : default_xs(p)) rep.add(theorem33a_check(x, ws.sieve(), q, ws.zeros(), SyntheticZeroSet{}));
  x_limit_records(ws, false, rep);
}

void suite_thm33b(Workspace& ws, const CheckParams& p, VerificationReport& rep) {
  QuadratureSpec q = ws.quad();
  q.osc_split = true;
  for (double x : default_xs(p)) rep.add(theorem33b_check(x, ws.sieve(), q, ws.cache(), SyntheticZeroSet{}));
  x_limit_records(ws, true, rep);
}

void suite_thm34(Workspace& ws, const CheckParams& p, VerificationReport& rep) {
  QuadratureSpec q = ws.quad();
  q.osc_split = true;
  struct Case {
    double x;
    ComplexValue r;
    double tol;
  };
  std::vector<Case> cases;
  if (p.x.empty() && p.r.empty()) {
    cases = {{10.0, 2.0, 5e-3}, {10.0, 0.0, 0.05}};
  } else {
    const std::vector<double> xs = p.x.empty() ? std::vector<double>{10.0} : p.x;
    const std::vector<ComplexValue> rs = p.r.empty() ? std::vector<ComplexValue>{0.0} : p.r;
    for (double x : xs)
      for (const auto& r : rs) cases.push_back({x, r, r.real() >= 1.0 ? 5e-3 : 0.05});
  }
  for (const auto& c : cases) {
    rep.add(theorem34_check(c.x, c.r, ws.sieve(), q, ws.cache(), SyntheticZeroSet{}, c.tol));
    rep.add(theorem34_first_equality(c.x, c.r, ws.sieve()));
  }
  const SyntheticZeroSet& zs = ws.synthetic();
  if (!zs.empty()) {
    // The synthetic zero sum against a term-by-term recomputation.
    const double x = cases.front().x;
    const ComplexValue r = cases.front().r;
    ComplexValue direct = 0.0;
    for (const auto& rho : zs.zeros()) {
      for (const ComplexValue z : {rho, std::conj(rho)}) {
        direct += theta_big(x, z - r) - theta_big(x, 1.0 - std::conj(z) - r);
      }
    }
    rep.add(make_entry("thm34.zero_sum", theorem34_zero_sum(x, r, zs), direct, 1e-12, 0.0));
  }
}

void suite_kernels(Workspace&, const CheckParams&, VerificationReport& rep) {
  rep.add(closed_form_battery());
}

void suite_spur1(Workspace& ws, const CheckParams& p, VerificationReport& rep) {
  const std::vector<double> ts =
      p.t.empty() ? std::vector<double>{-20.0, 10.0, 20.0, 30.0, 50.0, 100.3} : p.t;
  for (double t : ts) {
    const std::string id = "spur1@t=" + fmt(t);
    guarded(rep, id, 1e-8, [&] {
      Stopwatch sw;
      const ComplexValue lhs = zeta(ComplexValue(0.5, t));
      const ComplexValue rhs = reconstruct_zeta_on_line(t, ws.zeros());
      rep.add(make_entry(id, lhs, rhs, 1e-8 * std::max(1.0, std::abs(lhs)), 0.0, sw.seconds()));
    });
  }
}

using Suite = void (*)(Workspace&, const CheckParams&, VerificationReport&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s = {
      {"kernels", suite_kernels}, {"spur1", suite_spur1},   {"thm22", suite_thm22},
      {"cor23", suite_cor23},     {"thm24", suite_thm24},   {"thm25", suite_thm25},
      {"thm31", suite_thm31},     {"thm32", suite_thm32},   {"thm33a", suite_thm33a},
      {"thm33b", suite_thm33b},   {"thm34", suite_thm34},
  };
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

void RunConfig::validate() const {
  if (!(max_height > 15.0)) throw DomainError("max_height must exceed 15");
  if (!(truncation_T > 0.0) || truncation_T > max_height) {
    throw DomainError("truncation_T must lie in (0, max_height]");
  }
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("tolerances must be positive");
  if (sieve_limit < 1000 || sieve_limit > 100000000ULL) {
    throw DomainError("sieve_limit must lie in [1e3, 1e8]");
  }
}

std::string zeros_config_hash(const RunConfig& cfg) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "zeros:height=%.17g;step=%.17g;refine=%.17g;spacing=%.17g;radius=%.17g",
                cfg.max_height, kDefaultScanStep, kDefaultRefineTol, kDefaultGridSpacing,
                kDefaultExclusionRadius);
  return fnv1a_hex(buf);
}

Workspace::Workspace(RunConfig cfg, bool verbose) : cfg_(std::move(cfg)), verbose_(verbose) {
  cfg_.validate();
  std::filesystem::create_directories(cfg_.output_dir);
}

void Workspace::log(const std::string& msg) const {
  if (verbose_) std::cerr << "[critline] " << msg << '\n';
}

const ZeroTable& Workspace::zeros() {
  if (zeros_) return *zeros_;
  const auto path = cfg_.output_dir / "zeros.csv";
  const std::string hash = zeros_config_hash(cfg_);
  auto table = std::make_unique<ZeroTable>();
  if (load_zeros_csv(path, hash, *table)) {
    log("loaded " + std::to_string(table->ordinates.size()) + " zeros from " + path.string());
  } else {
    log("scanning zeros up to " + fmt(cfg_.max_height));
    *table = scan_zeros(cfg_.max_height);
    save_zeros_csv(path, *table, hash);
    log("found " + std::to_string(table->ordinates.size()) + " zeros (count " +
        (table->count_consistent ? "consistent" : "INCONSISTENT") + ")");
  }
  zeros_ = std::move(table);
  return *zeros_;
}

const CriticalLineCache& Workspace::cache() {
  if (cache_) return *cache_;
  const ZeroTable& z = zeros();
  const std::string hash = zeros_config_hash(cfg_);
  auto c = std::make_unique<CriticalLineCache>();
  if (CriticalLineCache::load(cfg_.output_dir, hash, *c)) {
    log("loaded line cache from " + cfg_.output_dir.string());
  } else {
    log("sampling log|zeta(1/2+iu)| up to " + fmt(cfg_.max_height));
    *c = CriticalLineCache::build(z, cfg_.max_height);
    c->save(cfg_.output_dir, hash);
  }
  log("line cache build_tol = " + fmt(c->build_tol()));
  cache_ = std::move(c);
  return *cache_;
}

const MangoldtTable& Workspace::sieve() {
  if (sieve_) return *sieve_;
  auto t = std::make_unique<MangoldtTable>();
  const auto path = sieve_path(cfg_);
  if (load_sieve_cache(path, cfg_.sieve_limit, *t)) {
    log("loaded sieve cache " + path.string());
  } else {
    log("sieving up to " + std::to_string(cfg_.sieve_limit));
    *t = build_mangoldt(cfg_.sieve_limit);
    save_sieve_cache(path, *t);
  }
  sieve_ = std::move(t);
  return *sieve_;
}

const SyntheticZeroSet& Workspace::synthetic() {
  if (!synthetic_) {
    synthetic_ = std::make_unique<SyntheticZeroSet>(
        cfg_.synthetic_zeros_path ? load_synthetic_zeros_csv(*cfg_.synthetic_zeros_path)
                                  : SyntheticZeroSet{});
  }
  return *synthetic_;
}

QuadratureSpec Workspace::quad() const {
  QuadratureSpec q;
  q.abs_tol = cfg_.abs_tol;
  q.rel_tol = cfg_.rel_tol;
  q.truncation_T = cfg_.truncation_T;
  return q;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

VerificationReport run_checks(Workspace& ws, const std::vector<std::string>& checks,
                              const CheckParams& params) {
  for (const auto& c : checks) {
    const auto& names = check_names();
    if (std::find(names.begin(), names.end(), c) == names.end()) {
      throw std::invalid_argument("unknown check name: " + c);
    }
  }
  VerificationReport rep;
  for (const auto& [name, fn] : suites()) {
    if (!checks.empty() && std::find(checks.begin(), checks.end(), name) == checks.end()) continue;
    fn(ws, params, rep);
  }
  return rep;
}

int cmd_build(const RunConfig& cfg) {
  try {
    Workspace ws(cfg);
    Stopwatch sw;
    const ZeroTable& z = ws.zeros();
    const CriticalLineCache& c = ws.cache();
    const MangoldtTable& m = ws.sieve();
    std::printf("zeros: %zu below %.6g (expected %d, %s)\n", z.ordinates.size(), z.height,
                expected_zero_count(z.height), z.count_consistent ? "consistent" : "inconsistent");
    std::printf("line cache: %zu samples, %zu exclusions, build_tol %.3g\n", c.grid_u().size(),
                c.exclusions().size(), c.build_tol());
    std::printf("sieve: %zu prime powers up to %llu\n", m.prime_powers().size(),
                static_cast<unsigned long long>(m.limit()));
    std::printf("output: %s (%.1f s)\n", cfg.output_dir.string().c_str(), sw.seconds());
    return z.count_consistent ? 0 : 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "build failed: %s\n", e.what());
    return 1;
  }
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& checks,
               const CheckParams& params) {
  try {
    Workspace ws(cfg);
    const VerificationReport rep = run_checks(ws, checks, params);
    write_report_csv(cfg.output_dir / "report.csv", rep);
    write_report_json(cfg.output_dir / "report.json", rep);
    for (const auto& e : rep.entries) {
      std::printf("%-4s %-44s |diff| %.3e  tol %.1e  tail %.2e\n", e.pass ? "ok" : "FAIL",
                  e.check_id.c_str(), e.abs_diff, e.tolerance, e.tail);
    }
    std::printf("%zu checks, %zu failed\n", rep.entries.size(), rep.failures());
    return rep.all_pass() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "verify failed: %s\n", e.what());
    return 1;
  }
}

int cmd_series(const RunConfig& cfg, const std::string& what, double lo, double hi, double step) {
  try {
    if (!(step > 0.0) || !(hi >= lo)) throw DomainError("series: requires lo <= hi and step > 0");
    static const std::set<std::string> kinds = {"fstar", "f11", "f21", "n_decomp", "theta"};
    if (!kinds.count(what)) throw std::invalid_argument("unknown series: " + what);
    Workspace ws(cfg);
    QuadratureSpec q = ws.quad();
    q.osc_split = true;
    const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    const auto path = cfg.output_dir / ("series_" + what + ".csv");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "arg,value,err_est\n";
    char buf[96];
    for (long i = 0; i < n; ++i) {
      const double a = lo + static_cast<double>(i) * step;
      double value = 0.0;
      double err = 0.0;
      if (what == "fstar") {
        value = f_star(a, ws.sieve());
      } else if (what == "f11") {
        const auto v = f11(a, q, ws.zeros());
        value = v.value;
        err = v.err_est + v.tail;
      } else if (what == "f21") {
        const auto v = f21(a, q, ws.cache());
        value = v.value;
        err = v.err_est + v.tail;
      } else if (what == "n_decomp") {
        const auto& z = ws.cache().zero_ordinates();
        const auto it = std::lower_bound(z.begin(), z.end(), a);
        const bool near = (it != z.end() && *it - a < 0.1) || (it != z.begin() && a - *(it - 1) < 0.1);
        if (near) continue;  // N2 is only defined mid-gap
        const auto v = n2(a, q, ws.cache());
        value = n1(a) + v.value;
        err = v.err_est + v.tail;
      } else {
        value = theta_exact(a);
      }
      std::snprintf(buf, sizeof buf, "%.10g,%.15g,%.3e\n", a, value, err);
      out << buf;
    }
    std::printf("wrote %s\n", path.string().c_str());
    return 0;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "series failed: %s\n", e.what());
    return 1;
  }
}

ComplexValue parse_complex(const std::string& text) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  static const std::regex pure_imag(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pure_imag)) {
    const std::string v = m[1].str();
    const double im = v.empty() || v == "+" ? 1.0 : v == "-" ? -1.0 : std::stod(v);
    return {0.0, im};
  }
  if (std::regex_match(text, m, re) && (m[1].matched || m[2].matched)) {
    const double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
    return {re_part, im};
  }
  throw std::invalid_argument("cannot parse complex number: " + text);
}

}  // namespace critline
