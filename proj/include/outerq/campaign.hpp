#pragma once

// Batch runs of verification checks from a key-value config file.
//
//   # comment
//   separation = 1e-9
//   jobs = 4
//   output = reports
//   check = cycle 5..9          (l defaults to 3..n)
//   check = cycle 7 4..6
//   check = path 7..9 2P3
//   check = structure 7 C4
//   check = lemma qmu 4..7      (range optional)

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "outerq/harness.hpp"

namespace outerq {

enum class CheckKind { Cycle, Path, Structure, Lemma };

struct CheckSpec {
  CheckKind kind = CheckKind::Cycle;
  int n = 0;
  int length = 0;  // cycle length
  std::optional<ForbiddenPattern> pattern;
  std::string lemma;
  int lo = 0, hi = 0;  // lemma order range
};

struct CampaignConfig {
  double separation = 1e-9;
  int jobs = 1;
  std::filesystem::path output = "reports";
  std::vector<CheckSpec> checks;
};

struct CampaignOutcome {
  std::vector<VerificationReport> reports;
  int exit_code = 0;  // 1 iff some report is Refuted
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

[[noreturn]] inline void config_error(int line, const std::string& what) {
  throw error(errc::parse, "config line " + std::to_string(line) + ": " + what);
}

inline int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  config_error(line, "expected an integer, got '" + s + "'");
}

inline std::pair<int, int> parse_range(const std::string& s, int line) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(s, line);
    return {v, v};
  }
  const int a = parse_int(s.substr(0, dots), line);
  const int b = parse_int(s.substr(dots + 2), line);
  if (a > b) config_error(line, "empty range '" + s + "'");
  return {a, b};
}

inline ForbiddenPattern parse_pattern_at(const std::string& s, int line) {
  try {
    return ForbiddenPattern::parse(s);
  } catch (const error& e) {
    config_error(line, e.what());
  }
}

inline void add_checks(CampaignConfig& cfg, const std::string& value, int line) {
  std::istringstream in(value);
  std::vector<std::string> w;
  for (std::string tok; in >> tok;) w.push_back(tok);
  if (w.empty()) config_error(line, "empty check");
  const std::string& kind = w[0];
  if (kind == "cycle") {
    if (w.size() < 2 || w.size() > 3) config_error(line, "usage: check = cycle <n-range> [<l-range>]");
    auto [n0, n1] = parse_range(w[1], line);
    for (int n = n0; n <= n1; ++n) {
      auto [l0, l1] = w.size() == 3 ? parse_range(w[2], line) : std::make_pair(3, n);
      for (int l = std::max(l0, 3); l <= std::min(l1, n); ++l) cfg.checks.push_back({CheckKind::Cycle, n, l, {}, {}, 0, 0});
    }
  } else if (kind == "path") {
    if (w.size() != 3) config_error(line, "usage: check = path <n-range> <t>P<l>");
    auto [n0, n1] = parse_range(w[1], line);
    ForbiddenPattern f = parse_pattern_at(w[2], line);
    if (f.kind() != PatternKind::PathUnion) config_error(line, "path checks need a <t>P<l> pattern");
    for (int n = n0; n <= n1; ++n) {
      if (f.order() <= n - 1) cfg.checks.push_back({CheckKind::Path, n, 0, f, {}, 0, 0});
    }
  } else if (kind == "structure") {
    if (w.size() != 3) config_error(line, "usage: check = structure <n-range> <pattern>");
    auto [n0, n1] = parse_range(w[1], line);
    ForbiddenPattern f = parse_pattern_at(w[2], line);
    for (int n = n0; n <= n1; ++n) {
      if (!Harness::in_structural_domain(n, f)) config_error(line, f.to_string() + " is outside the structural domain at n = " + std::to_string(n));
      cfg.checks.push_back({CheckKind::Structure, n, 0, f, {}, 0, 0});
    }
  } else if (kind == "lemma") {
    if (w.size() < 2 || w.size() > 3) config_error(line, "usage: check = lemma <name> [<n-range>]");
    const auto& suites = lemma_suites();
    auto it = std::find_if(suites.begin(), suites.end(), [&](const LemmaSuite& s) { return w[1] == s.name; });
    if (it == suites.end()) config_error(line, "unknown lemma suite '" + w[1] + "'");
    auto [lo, hi] = w.size() == 3 ? parse_range(w[2], line) : std::make_pair(it->default_lo, it->default_hi);
    cfg.checks.push_back({CheckKind::Lemma, 0, 0, {}, w[1], lo, hi});
  } else {
    config_error(line, "unknown check kind '" + kind + "'");
  }
}

}  // namespace detail

inline CampaignConfig parse_campaign(std::istream& in) {
  CampaignConfig cfg;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    const std::string text = detail::trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) detail::config_error(line, "expected 'key = value'");
    const std::string key = detail::trim(text.substr(0, eq));
    const std::string value = detail::trim(text.substr(eq + 1));
    if (key == "separation") {
      try {
        cfg.separation = std::stod(value);
      } catch (const std::exception&) {
        detail::config_error(line, "separation must be a real number");
      }
      if (!(cfg.separation > 0)) detail::config_error(line, "separation must be positive");
    } else if (key == "jobs") {
      cfg.jobs = detail::parse_int(value, line);
      if (cfg.jobs < 1) detail::config_error(line, "jobs must be >= 1");
    } else if (key == "output") {
      if (value.empty()) detail::config_error(line, "empty output directory");
      cfg.output = value;
    } else if (key == "check") {
      detail::add_checks(cfg, value, line);
    } else {
      detail::config_error(line, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

inline CampaignConfig load_campaign(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io, "cannot read config " + path.string());
  return parse_campaign(in);
}

inline VerificationReport run_check(Harness& h, const CheckSpec& c) {
  switch (c.kind) {
    case CheckKind::Cycle: return h.verify_cycle_theorem(c.n, c.length);
    case CheckKind::Path: return h.verify_path_theorem(c.n, c.pattern->copies(), c.pattern->length());
    case CheckKind::Structure: return h.structural_check(c.n, *c.pattern);
    case CheckKind::Lemma: return h.check_lemma(c.lemma, c.lo, c.hi);
  }
  throw error(errc::unknown_check, "unknown check kind");
}

inline std::string format_margin(double m) {
  if (std::isinf(m)) return "";
  std::ostringstream s;
  s.precision(17);
  s << m;
  return s.str();
}

inline void write_report(const std::filesystem::path& dir, const VerificationReport& r) {
  std::ofstream out(dir / (r.check_id + ".json"));
  if (!out) throw error(errc::io, "cannot write report " + (dir / (r.check_id + ".json")).string());
  out << to_json(r).dump(2) << '\n';
}

inline void write_summary(const std::filesystem::path& file, const std::vector<VerificationReport>& reports) {
  std::ofstream out(file);
  if (!out) throw error(errc::io, "cannot write summary " + file.string());
  out << "check_id,status,margin,runtime_ms\n";
  for (const auto& r : reports) {
    out << r.check_id << ',' << to_string(r.status) << ',' << format_margin(r.margin) << ',' << r.runtime_ms << '\n';
  }
}

/// Runs every configured check on `cfg.jobs` workers, writing
/// <output>/<check_id>.json and <output>/summary.csv.
inline CampaignOutcome run_campaign(const CampaignConfig& cfg, HarnessOptions options = {}) {
  options.separation = cfg.separation;
  Harness harness(std::move(options));
  std::error_code ec;
  std::filesystem::create_directories(cfg.output, ec);
  if (ec) throw error(errc::io, "cannot create " + cfg.output.string() + ": " + ec.message());

  CampaignOutcome out;
  out.reports.resize(cfg.checks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cfg.checks.size();) {
      try {
        out.reports[i] = run_check(harness, cfg.checks[i]);
        write_report(cfg.output, out.reports[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = cfg.checks.size();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(cfg.checks.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  write_summary(cfg.output / "summary.csv", out.reports);
  for (const auto& r : out.reports) {
    if (r.status == Status::Refuted) out.exit_code = 1;
  }
  return out;
}

}  // namespace outerq
