// Command-line front end: construct, spectral, enumerate, ascend, verify,
// lemma, campaign. Graphs are read and written as graph6 lines.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "outerq/campaign.hpp"
#include "outerq/constructions.hpp"
#include "outerq/enumeration.hpp"
#include "outerq/harness.hpp"
#include "outerq/spectral.hpp"
#include "outerq/transforms.hpp"

using namespace outerq;
using json = nlohmann::ordered_json;

namespace {

std::vector<Graph> read_graphs(const std::string& file) {
  std::ifstream f;
  std::istream* in = &std::cin;
  if (file != "-") {
    f.open(file);
    if (!f) throw error(errc::io, "cannot read " + file);
    in = &f;
  }
  std::vector<Graph> out;
  for (std::string line; std::getline(*in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(from_graph6(line));
  }
  return out;
}

/// Writes to <dir>/<check_id>.json when a directory is given, else stdout.
void emit_report(const VerificationReport& r, const std::string& dir) {
  if (dir.empty()) {
    std::cout << to_json(r).dump(2) << '\n';
    return;
  }
  std::filesystem::create_directories(dir);
  write_report(dir, r);
  std::cout << r.check_id << ',' << to_string(r.status) << ',' << format_margin(r.margin) << ',' << r.runtime_ms << '\n';
}

std::pair<int, int> parse_cli_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) return {std::stoi(s), std::stoi(s)};
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-index extremal problems for outerplanar graphs"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "print the extremal construction for a forbidden pattern");
  int c_n = 0;
  std::string c_pattern;
  std::vector<int> c_parts;
  construct->add_option("--n", c_n, "order");
  construct->add_option("--pattern", c_pattern, "C<l> or <t>P<l>");
  construct->add_option("--parts", c_parts, "path orders of K1 v (u P_ai), instead of a pattern")->delimiter(',');
  bool c_info = false;
  construct->add_flag("--info", c_info, "print construction data as JSON");

  // spectral
  auto* spectral = app.add_subcommand("spectral", "Q-index, Perron vector and eta bound of graph6 input");
  std::string s_file = "-";
  double s_sep = 1e-12;
  spectral->add_option("--graph6", s_file, "graph6 file, - for stdin");
  spectral->add_option("--sep", s_sep, "residual tolerance");

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "connected outerplanar graphs of order n, one per isomorphism class");
  std::string e_n, e_pattern, e_out;
  bool e_count = false;
  enumerate_cmd->add_option("--n", e_n, "order (1..10) or range a..b")->required();
  enumerate_cmd->add_option("--pattern", e_pattern, "forbidden C<l> or <t>P<l>");
  enumerate_cmd->add_flag("--count-only", e_count, "print CSV counts instead of graphs");
  enumerate_cmd->add_option("--out", e_out, "write graph6 lines to this file");

  // ascend
  auto* ascend = app.add_subcommand("ascend", "greedy Q-increasing rewrites from a start graph");
  std::string a_file = "-", a_pattern;
  int a_steps = 1000;
  double a_sep = 1e-9;
  ascend->add_option("--graph6", a_file, "graph6 file (first line used), - for stdin");
  ascend->add_option("--pattern", a_pattern, "forbidden C<l> or <t>P<l>");
  ascend->add_option("--max-steps", a_steps, "step limit");
  ascend->add_option("--sep", a_sep, "separation for certified increases");

  // verify
  auto* verify = app.add_subcommand("verify", "brute-force check of an extremal or structural statement");
  int v_n = 0;
  std::string v_pattern, v_out;
  double v_sep = 1e-9;
  bool v_structure = false;
  verify->add_option("--n", v_n, "order")->required();
  verify->add_option("--pattern", v_pattern, "C<l> or <t>P<l>")->required();
  verify->add_flag("--structure", v_structure, "check the universal-vertex structure of the maximisers");
  verify->add_option("--sep", v_sep, "separation");
  verify->add_option("--out", v_out, "report directory");

  // lemma
  auto* lemma = app.add_subcommand("lemma", "run one lemma suite");
  std::string l_name, l_range, l_out;
  double l_sep = 1e-9;
  lemma->add_option("name", l_name, "obv, addedges, delta, qmu, perron, edgemove2, edgemove3, edgemove, edgeshift, claim41")
      ->required();
  lemma->add_option("--n", l_range, "order range a..b");
  lemma->add_option("--sep", l_sep, "separation");
  lemma->add_option("--out", l_out, "report directory");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "run the checks of a config file");
  std::string k_config, k_out;
  int k_jobs = 0;
  campaign->add_option("config", k_config, "config file")->required();
  campaign->add_option("--jobs", k_jobs, "worker threads (overrides config)");
  campaign->add_option("--out", k_out, "output directory (overrides config)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      if (!c_parts.empty()) {
        std::cout << to_graph6(path_join(PathJoinSpec(c_parts))) << '\n';
        return 0;
      }
      if (c_pattern.empty() || c_n < 1) throw error(errc::parameter_domain, "construct needs --n and --pattern, or --parts");
      const ForbiddenPattern f = ForbiddenPattern::parse(c_pattern);
      if (f.kind() == PatternKind::Cycle) {
        const CycleExtremal c = cycle_extremal(c_n, f.length());
        if (c_info) {
          std::cout << json{{"graph6", to_graph6(c.graph)}, {"alpha", c.alpha}, {"r", c.r}, {"parts", c.spec.to_string()}}.dump(2)
                    << '\n';
        } else {
          std::cout << to_graph6(c.graph) << '\n';
        }
      } else {
        const PathExtremal p = path_extremal(c_n, f.copies(), f.length());
        if (c_info) {
          std::cout << json{{"graph6", to_graph6(p.graph)},
                            {"parts", p.spec.to_string()},
                            {"alpha", p.alpha},
                            {"r", p.r},
                            {"discrepancy_flag", p.discrepancy},
                            {"printed_alpha", p.printed.alpha},
                            {"printed_r", p.printed.r},
                            {"printed_part_sum", p.printed.part_sum}}
                           .dump(2)
                    << '\n';
        } else {
          std::cout << to_graph6(p.graph) << '\n';
        }
      }
      return 0;
    }

    if (*spectral) {
      for (const Graph& g : read_graphs(s_file)) {
        const SpectralResult r = q_index(g, s_sep);
        json j{{"graph6", to_graph6(g)}, {"q", r.q}, {"residual", r.residual}, {"iterations", r.iterations},
               {"connected", r.connected}, {"perron", r.x}};
        bool isolated = false;
        for (int v = 0; v < g.order(); ++v) isolated |= g.degree(v) == 0;
        j["eta_max"] = isolated ? json(nullptr) : json(eta_max(g));
        std::cout << j.dump() << '\n';
      }
      return 0;
    }

    if (*enumerate_cmd) {
      std::optional<ForbiddenPattern> pattern;
      if (!e_pattern.empty()) pattern = ForbiddenPattern::parse(e_pattern);
      const auto [lo, hi] = parse_cli_range(e_n);
      if (lo > hi) throw error(errc::parameter_domain, "empty range " + e_n);
      if (e_count) {
        std::cout << "n,pattern,count\n";
        for (int n = lo; n <= hi; ++n) {
          long count = 0;
          enumerate(EnumerationClass{n, pattern}, [&](const Graph&) { ++count; });
          std::cout << n << ',' << (pattern ? pattern->to_string() : "none") << ',' << count << '\n';
        }
        return 0;
      }
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!e_out.empty()) {
        file.open(e_out);
        if (!file) throw error(errc::io, "cannot write " + e_out);
        out = &file;
      }
      for (int n = lo; n <= hi; ++n) enumerate(EnumerationClass{n, pattern}, [&](const Graph& g) { *out << to_graph6(g) << '\n'; });
      return 0;
    }

    if (*ascend) {
      const std::vector<Graph> gs = read_graphs(a_file);
      if (gs.empty()) throw error(errc::parse, "no graph given");
      std::optional<ForbiddenPattern> f;
      if (!a_pattern.empty()) f = ForbiddenPattern::parse(a_pattern);
      const AscentResult r = greedy_ascent(gs.front(), f, a_steps, a_sep);
      json trace = json::array();
      for (const AscentStep& s : r.trace) {
        json removed = json::array(), added = json::array();
        for (const Edge& e : s.move.removed) removed.push_back({e.a, e.b});
        for (const Edge& e : s.move.added) added.push_back({e.a, e.b});
        trace.push_back({{"move", to_string(s.move.kind)}, {"vertices", s.move.vertices}, {"removed", removed},
                         {"added", added}, {"q_before", s.q_before}, {"q_after", s.q_after}, {"graph6", s.graph6}});
      }
      std::cout << json{{"start", to_graph6(gs.front())}, {"final", to_graph6(r.graph)},
                        {"local_maximum", r.local_maximum}, {"trace", trace}}
                       .dump(2)
                << '\n';
      return 0;
    }

    if (*verify) {
      HarnessOptions opt;
      opt.separation = v_sep;
      Harness h(opt);
      const ForbiddenPattern f = ForbiddenPattern::parse(v_pattern);
      VerificationReport r;
      if (v_structure) {
        r = h.structural_check(v_n, f);
      } else if (f.kind() == PatternKind::Cycle) {
        r = h.verify_cycle_theorem(v_n, f.length());
      } else {
        r = h.verify_path_theorem(v_n, f.copies(), f.length());
      }
      emit_report(r, v_out);
      return r.status == Status::Refuted ? 1 : 0;
    }

    if (*lemma) {
      HarnessOptions opt;
      opt.separation = l_sep;
      Harness h(opt);
      VerificationReport r;
      if (l_range.empty()) {
        r = h.check_lemma(l_name);
      } else {
        auto [lo, hi] = parse_cli_range(l_range);
        r = h.check_lemma(l_name, lo, hi);
      }
      emit_report(r, l_out);
      return r.status == Status::Refuted ? 1 : 0;
    }

    if (*campaign) {
      CampaignConfig cfg = load_campaign(k_config);
      if (k_jobs > 0) cfg.jobs = k_jobs;
      if (!k_out.empty()) cfg.output = k_out;
      const CampaignOutcome out = run_campaign(cfg);
      for (const auto& r : out.reports) {
        std::cout << r.check_id << ',' << to_string(r.status) << ',' << format_margin(r.margin) << ',' << r.runtime_ms
                  << '\n';
      }
      return out.exit_code;
    }
  } catch (const error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
