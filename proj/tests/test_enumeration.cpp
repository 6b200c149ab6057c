#include "catch_amalgamated.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "outerq/constructions.hpp"
#include "outerq/enumeration.hpp"

using namespace outerq;

namespace {

std::set<CanonicalCode> codes(const std::vector<Graph>& gs) {
  std::set<CanonicalCode> out;
  for (const Graph& g : gs) out.insert(canonical_code(g));
  return out;
}

// connected outerplanar graphs of order n, by filtering every labelled graph
std::set<CanonicalCode> filter_all_labelled(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::set<CanonicalCode> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) e.push_back(pairs[i]);
    const Graph g = Graph::from_edges(n, e);
    if (is_connected(g) && oracle::is_outerplanar(g)) out.insert(canonical_code(g));
  }
  return out;
}

}  // namespace

TEST_CASE("graph counts match known sequences") {
  const int all[] = {1, 2, 4, 11, 34, 156, 1044};
  const int connected[] = {1, 1, 2, 6, 21, 112, 853};
  const int outerplanar[] = {1, 1, 2, 5, 13, 46, 172, 777};
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(generate_structural(n, false, false).size() == static_cast<std::size_t>(all[n - 1]));
    CHECK(generate_structural(n, true, false).size() == static_cast<std::size_t>(connected[n - 1]));
  }
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(generate_structural(n, true, true).size() == static_cast<std::size_t>(outerplanar[n - 1]));
  }
}

TEST_CASE("small cases") {
  const auto two = enumerate(EnumerationClass{2, std::nullopt});
  REQUIRE(two.size() == 1);
  CHECK(two[0] == complete(2));
  CHECK(enumerate(EnumerationClass{1, std::nullopt}).size() == 1);
  CHECK_THROWS_AS(generate_structural(11, true, true), error);
  CHECK_THROWS_AS(generate_structural(0, true, true), error);
}

TEST_CASE("completeness against the filter-all-labelled oracle") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto got = codes(generate_structural(n, true, true));
    REQUIRE(got == filter_all_labelled(n));
  }
}

TEST_CASE("completeness at order 7 against filtering every graph") {
  const auto all = generate_structural(7, false, false);
  REQUIRE(all.size() == 1044);
  REQUIRE(codes(all).size() == 1044);
  std::set<CanonicalCode> expected;
  for (const Graph& g : all)
    if (is_connected(g) && oracle::is_outerplanar(g)) expected.insert(canonical_code(g));
  const auto gen = generate_structural(7, true, true);
  CHECK(gen.size() == expected.size());
  CHECK(codes(gen) == expected);
}

TEST_CASE("emitted graphs are distinct and pass the class predicates") {
  for (int n = 2; n <= 9; ++n) {
    const auto gs = generate_structural(n, true, true);
    REQUIRE(codes(gs).size() == gs.size());
    for (const Graph& g : gs) {
      REQUIRE(g.order() == n);
      REQUIRE(is_connected(g));
      REQUIRE(is_outerplanar(g));
    }
  }
}

TEST_CASE("pattern filter") {
  EnumerationClass cls{5, ForbiddenPattern::cycle(3)};
  const auto gs = enumerate(cls);
  CHECK_FALSE(gs.empty());
  for (const Graph& g : gs) CHECK_FALSE(contains_cycle(g, 3));
  std::size_t direct = 0;
  for (const Graph& g : generate_structural(5, true, true))
    if (!contains_cycle(g, 3)) ++direct;
  CHECK(gs.size() == direct);
}

TEST_CASE("argmax examples") {
  const ArgmaxResult a = extremal_argmax(EnumerationClass{6, ForbiddenPattern::cycle(3)});
  REQUIRE(a.winners.size() == 1);
  CHECK(a.unique);
  CHECK(is_isomorphic(a.winners[0], star(6)));
  CHECK(a.q == Catch::Approx(6.0).margin(1e-9));
  CHECK(a.margin > 1e-9);

  const ArgmaxResult b = extremal_argmax(EnumerationClass{7, ForbiddenPattern::cycle(4)});
  REQUIRE(b.unique);
  CHECK(is_isomorphic(b.winners[0], cycle_extremal(7, 4).graph));

  const ArgmaxResult c = extremal_argmax(EnumerationClass{5, ForbiddenPattern::paths(2, 2)});
  REQUIRE(c.unique);
  CHECK(is_isomorphic(c.winners[0], star(5)));
}

TEST_CASE("argmax is stable under a permuted emission order") {
  std::vector<Graph> gs = enumerate(EnumerationClass{8, ForbiddenPattern::cycle(5)});
  const ArgmaxResult a = extremal_argmax(gs);
  std::mt19937 rng(1);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(gs.begin(), gs.end(), rng);
    const ArgmaxResult b = extremal_argmax(gs);
    REQUIRE(b.winners.size() == a.winners.size());
    CHECK(codes(b.winners) == codes(a.winners));
    CHECK(b.margin == Catch::Approx(a.margin).margin(1e-12));
  }
}

TEST_CASE("ties are reported, not broken") {
  std::vector<Graph> twins = {path(4), path(4).permuted(std::vector<int>{3, 2, 1, 0}), disjoint_union({path(2), path(2)})};
  const ArgmaxResult r = extremal_argmax(twins);
  CHECK(r.winners.size() == 2);
  CHECK_FALSE(r.unique);
  const ArgmaxResult empty = extremal_argmax(std::vector<Graph>{});
  CHECK(empty.winners.empty());
  CHECK(empty.class_size == 0);
}
