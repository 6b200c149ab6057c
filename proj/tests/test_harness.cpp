#include "catch_amalgamated.hpp"

#include "outerq/harness.hpp"

using namespace outerq;

namespace {

Harness& shared() {
  static Harness h;
  return h;
}

bool has_note(const VerificationReport& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("report JSON round trip") {
  VerificationReport r;
  r.check_id = "x";
  r.parameters = {{"n", 7}, {"pattern", "C4"}};
  r.status = Status::Tie;
  r.witness_graphs = {"Fhc?G"};
  r.q_values = {7.25};
  r.margin = 1e-5;
  r.runtime_ms = 12;
  r.notes = {"a"};
  const VerificationReport back = report_from_json(to_json(r).dump());
  CHECK(back.check_id == "x");
  CHECK(back.parameters == r.parameters);
  CHECK(back.status == Status::Tie);
  CHECK(back.witness_graphs == r.witness_graphs);
  CHECK(back.q_values == r.q_values);
  CHECK(back.margin == r.margin);
  CHECK(back.runtime_ms == 12);
  CHECK(back.notes == r.notes);

  r.margin = std::numeric_limits<double>::infinity();
  const auto j = to_json(r);
  CHECK(j["margin"].is_null());
  CHECK(std::isinf(report_from_json(j).margin));

  CHECK_THROWS_AS(report_from_json(std::string("{")), error);
  CHECK_THROWS_AS(report_from_json(std::string("{\"check_id\": 3}")), error);
  auto bad = to_json(r);
  bad["status"] = "Maybe";
  CHECK_THROWS_AS(report_from_json(bad), error);
}

TEST_CASE("cycle theorem checks") {
  Harness& h = shared();
  const VerificationReport a = h.verify_cycle_theorem(6, 3);
  CHECK(a.check_id == "cycle-n6-C3");
  CHECK(a.status == Status::Confirmed);
  CHECK(a.witness_graphs == std::vector<std::string>{to_graph6(star(6))});
  CHECK(a.margin > h.separation());

  const VerificationReport b = h.verify_cycle_theorem(8, 4);
  CHECK(b.status == Status::Confirmed);
  CHECK(b.parameters["alpha"] == 3);
  CHECK(b.parameters["r"] == 1);

  const VerificationReport c = h.verify_cycle_theorem(5, 5);
  CHECK(c.status == Status::Confirmed);
  CHECK(c.parameters["class_size"].get<int>() > 0);

  CHECK_THROWS_AS(h.verify_cycle_theorem(5, 6), error);
  CHECK_THROWS_AS(h.verify_cycle_theorem(11, 4), error);
}

TEST_CASE("path theorem checks") {
  Harness& h = shared();
  const VerificationReport a = h.verify_path_theorem(9, 1, 4);
  CHECK(a.check_id == "path-n9-1P4");
  CHECK(a.status == Status::Confirmed);
  CHECK(a.parameters["construction_local_maximum"] == true);
  CHECK(a.parameters["discrepancy_flag"] == false);

  const VerificationReport b = h.verify_path_theorem(9, 1, 6);
  CHECK(has_note(b, "reading of the t=1 parts"));
  CHECK(b.parameters["hypothesis_threshold"].get<double>() > 9);
  CHECK((b.status == Status::Confirmed || b.status == Status::OutOfScope));

  const VerificationReport c = h.verify_path_theorem(9, 2, 3);
  CHECK(c.parameters["discrepancy_flag"] == true);
  CHECK(has_note(c, "discrepancy_flag"));
  CHECK(c.parameters["construction_pattern_free"] == true);
  CHECK(c.status != Status::Refuted);
}

TEST_CASE("path theorem thresholds") {
  CHECK(Harness::path_theorem_threshold(1, 4) == Catch::Approx(3.0));
  CHECK(Harness::path_theorem_threshold(1, 6) == Catch::Approx(30 + 30 * std::sqrt(2.0)));
  CHECK(Harness::path_theorem_threshold(2, 2) == Catch::Approx(3.0));
  CHECK(Harness::path_theorem_threshold(3, 5) == Catch::Approx(std::max(26.0, 90 + 30 * std::sqrt(12.0))));
}

TEST_CASE("structural checks") {
  Harness& h = shared();
  for (auto [n, p] : std::vector<std::pair<int, const char*>>{{7, "C4"}, {8, "2P2"}, {6, "C3"}, {6, "P4"}}) {
    CAPTURE(n, p);
    const VerificationReport r = h.structural_check(n, ForbiddenPattern::parse(p));
    CHECK(r.status == Status::Confirmed);
  }
  CHECK(Harness::in_structural_domain(5, ForbiddenPattern::parse("P4")));
  CHECK_FALSE(Harness::in_structural_domain(4, ForbiddenPattern::parse("P4")));
  CHECK_FALSE(Harness::in_structural_domain(4, ForbiddenPattern::parse("C5")));
  try {
    (void)h.structural_check(4, ForbiddenPattern::parse("P4"));
    FAIL("expected a domain error");
  } catch (const error& e) {
    CHECK(e.code() == errc::domain);
  }
}

TEST_CASE("lemma suites on small ranges") {
  Harness& h = shared();
  for (const char* name : {"qmu", "delta", "addedges", "perron", "edgemove2", "edgemove3", "edgemove"}) {
    CAPTURE(name);
    // chord swaps need d(u) >= 5, so order 7 at least
    const int hi = std::string(name) == "edgemove" ? 7 : 6;
    const VerificationReport r = h.check_lemma(name, 2, hi);
    CHECK(r.check_id == std::string("lemma-") + name + "-2-" + std::to_string(hi));
    CHECK(r.status == Status::Confirmed);
    CHECK(r.parameters["violations"] == 0);
    CHECK(r.parameters["indistinguishable"] == 0);
    CHECK(r.parameters["instances"].get<long>() > 0);
    CHECK(r.margin > h.separation());
  }
  const VerificationReport c = h.check_lemma("claim41", 6, 14);
  CHECK(c.status == Status::Confirmed);
  const VerificationReport e = h.check_lemma("edgeshift", 2, 6);
  CHECK(e.status == Status::Confirmed);
}

// The fourth neighbourhood property fails once the two common-neighbour
// pairs are allowed to be non-adjacent.
TEST_CASE("neighbourhood lemma: shared common neighbours are found") {
  Harness& h = shared();
  const VerificationReport r = h.check_lemma("obv", 1, 6);
  CHECK(r.status == Status::Refuted);
  CHECK(r.parameters["violations_size_bound"] == 0);
  CHECK(r.parameters["violations_i"] == 0);
  CHECK(r.parameters["violations_ii"] == 0);
  CHECK(r.parameters["violations_iii"] == 0);
  CHECK(r.parameters["violations_iv"].get<long>() > 0);
  CHECK(r.parameters["violations_iv_adjacent_pair"] == 0);
  CHECK(std::find(r.witness_graphs.begin(), r.witness_graphs.end(), "Er`G") != r.witness_graphs.end());
  const Graph w = from_graph6("Er`G");
  CHECK(is_connected(w));
  CHECK(is_outerplanar(w));
  // common neighbours of 0 with its non-neighbours 3 and 5
  CHECK(common_neighbors(w, 0, 3) == (bit(1) | bit(2)));
  CHECK(common_neighbors(w, 0, 5) == (bit(1) | bit(4)));
}

TEST_CASE("lemma defaults and errors") {
  Harness& h = shared();
  CHECK(lemma_suites().size() == 10);
  try {
    (void)h.check_lemma("nope");
    FAIL("expected unknown check");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_check);
  }
  CHECK_THROWS_AS(h.check_lemma("nope", 1, 2), error);
}

TEST_CASE("report status invariants") {
  Harness& h = shared();
  std::vector<VerificationReport> rs = {h.verify_cycle_theorem(7, 4), h.check_lemma("obv", 1, 6),
                                        h.check_lemma("qmu", 2, 5), h.structural_check(7, ForbiddenPattern::parse("C4"))};
  for (const auto& r : rs) {
    CAPTURE(r.check_id);
    if (r.status == Status::Confirmed) CHECK(r.margin > h.separation());
    if (r.status == Status::Refuted) CHECK_FALSE(r.witness_graphs.empty());
  }
}
