// Acceptance run: one PASS/FAIL line per criterion, then a nonzero exit if
// any criterion failed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "outerq/harness.hpp"

using namespace outerq;

namespace {

constexpr double star_tolerance = 1e-10;
constexpr double separation = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (detail.size() < 600) detail += (detail.empty() ? "" : "; ") + why;
  }
};

Harness& harness() {
  static Harness h([] {
    HarnessOptions o;
    o.separation = separation;
    return o;
  }());
  return h;
}

Outcome star_spectrum() {
  Outcome o;
  double worst = 0;
  for (int n = 2; n <= 32; ++n) {
    const double err = std::abs(q_index(star(n), star_tolerance / 10).q - n);
    worst = std::max(worst, err);
    if (err > star_tolerance) o.fail("n=" + std::to_string(n) + " error " + std::to_string(err));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max error %.3g", worst);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome small_patterns() {
  Outcome o;
  double worst = std::numeric_limits<double>::infinity();
  for (const char* p : {"P4", "2K2", "C3"})
    for (int n = 5; n <= 9; ++n) {
      const ArgmaxResult am = harness().argmax(n, ForbiddenPattern::parse(p));
      const std::string cell = std::string(p) + " n=" + std::to_string(n);
      if (!am.unique || am.winners.size() != 1) {
        o.fail(cell + " has " + std::to_string(am.winners.size()) + " maximisers");
      } else if (!is_isomorphic(am.winners[0], star(n))) {
        o.fail(cell + " maximiser " + to_graph6(am.winners[0]) + " is not a star");
      } else if (!(am.margin > separation)) {
        o.fail(cell + " margin " + std::to_string(am.margin));
      }
      worst = std::min(worst, am.margin);
    }
  if (o.pass) o.detail = "15 cells, min margin " + std::to_string(worst);
  return o;
}

Outcome cycle_cells() {
  Outcome o;
  int cells = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int n = 5; n <= 9; ++n)
    for (int l = 3; l <= n; ++l) {
      const VerificationReport r = harness().verify_cycle_theorem(n, l);
      ++cells;
      worst = std::min(worst, r.margin);
      if (r.status != Status::Confirmed || !(r.margin > separation)) {
        std::string w;
        for (const auto& g : r.witness_graphs) w += " " + g;
        o.fail(r.check_id + " " + to_string(r.status) + " witnesses:" + w);
      }
    }
  if (o.pass) o.detail = std::to_string(cells) + " cells, min margin " + std::to_string(worst);
  return o;
}

std::string lemma_line(const VerificationReport& r) {
  return r.check_id + " " + to_string(r.status) + " instances=" + r.parameters["instances"].dump() +
         " violations=" + r.parameters["violations"].dump() + " indistinguishable=" + r.parameters["indistinguishable"].dump();
}

Outcome lemma_group(const std::vector<std::string>& names) {
  Outcome o;
  std::string summary;
  for (const auto& name : names) {
    const VerificationReport r = harness().check_lemma(name);
    summary += (summary.empty() ? "" : "; ") + r.check_id + " instances=" + r.parameters["instances"].dump();
    const bool clean = r.parameters["violations"] == 0 && r.parameters["indistinguishable"] == 0;
    if (r.status != Status::Confirmed || !clean) {
      std::string why = lemma_line(r);
      for (const char* k : {"violations_size_bound", "violations_i", "violations_ii", "violations_iii", "violations_iv",
                            "violations_iv_adjacent_pair"})
        if (r.parameters.contains(k)) why += std::string(" ") + k + "=" + r.parameters[k].dump();
      if (!r.witness_graphs.empty()) why += " first witness " + r.witness_graphs.front();
      if (!r.notes.empty()) why += " (" + r.notes.front() + ")";
      o.fail(why);
    }
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome path_reports() {
  Outcome o;
  int confirmed = 0, out_of_scope = 0;
  const std::pair<int, int> cases[] = {{1, 4}, {1, 5}, {1, 6}, {2, 2}, {2, 3}};
  for (auto [t, l] : cases)
    for (int n = t * l + 1; n <= 9; ++n) {
      if (n < 5) continue;
      const VerificationReport r = harness().verify_path_theorem(n, t, l);
      const auto& p = r.parameters;
      const bool certified = p["construction_connected"] == true && p["construction_outerplanar"] == true &&
                             p["construction_pattern_free"] == true && p["construction_local_maximum"] == true;
      if (!certified) o.fail(r.check_id + " construction not certified");
      if (r.witness_graphs.empty()) o.fail(r.check_id + " has no argmax data");
      if (t >= 2) {
        bool noted = false;
        for (const auto& s : r.notes) noted |= s.find("discrepancy_flag") != std::string::npos;
        if (p["discrepancy_flag"] != true || !noted) o.fail(r.check_id + " discrepancy not flagged");
      }
      if (r.status == Status::Confirmed) {
        ++confirmed;
      } else if (r.status == Status::OutOfScope) {
        ++out_of_scope;
      } else {
        o.fail(r.check_id + " " + to_string(r.status));
      }
    }
  if (o.pass) o.detail = std::to_string(confirmed) + " Confirmed, " + std::to_string(out_of_scope) + " OutOfScope";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const int expected[] = {1, 2, 4, 11, 34, 156, 1044};
  long graphs = 0, comparisons = 0;
  for (int n = 1; n <= 7; ++n) {
    const std::vector<Graph> all = generate_structural(n, false, false);
    if (all.size() != static_cast<std::size_t>(expected[n - 1])) {
      o.fail("n=" + std::to_string(n) + " catalogue has " + std::to_string(all.size()) + " graphs");
    }
    for (const Graph& g : all) {
      ++graphs;
      const std::string id = to_graph6(g);
      ++comparisons;
      if (is_outerplanar(g) != oracle::is_outerplanar(g)) o.fail("outerplanarity " + id);
      for (int l = 3; l <= n; ++l) {
        ++comparisons;
        if (contains_cycle(g, l) != oracle::contains_cycle(g, l)) o.fail("C" + std::to_string(l) + " " + id);
      }
      for (int l = 2; l <= n; ++l) {
        const int packing = oracle::max_path_packing(g, l);
        for (int t = 1; t * l <= n; ++t) {
          ++comparisons;
          if (contains_disjoint_paths(g, t, l) != (packing >= t))
            o.fail(std::to_string(t) + "P" + std::to_string(l) + " " + id);
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(graphs) + " graphs, " + std::to_string(comparisons) + " comparisons";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "star-spectrum", 1, star_spectrum},
      {2, "small-patterns-star", 120, small_patterns},
      {3, "cycle-extremal", 900, cycle_cells},
      {4, "monotonicity-suites", 1200,
       [] { return lemma_group({"addedges", "perron", "edgemove2", "edgemove3", "edgemove", "edgeshift"}); }},
      {5, "bound-suites", 1200, [] { return lemma_group({"delta", "qmu", "obv"}); }},
      {6, "fan-perron-bound", 1200, [] { return lemma_group({"claim41"}); }},
      {7, "path-reports", 1200, path_reports},
      {8, "oracle-equivalence", 1200, oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_s) + " s");
    if (!o.pass) ++failed;
    std::printf("%s %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, s, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
