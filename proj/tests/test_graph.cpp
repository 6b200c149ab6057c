#include "catch_amalgamated.hpp"

#include <random>

#include "outerq/graph.hpp"

using namespace outerq;

TEST_CASE("builders produce the expected sizes") {
  CHECK(path(5).size() == 4);
  CHECK(cycle(6).size() == 6);
  CHECK(star(5).degree(0) == 4);
  CHECK(complete(5).size() == 10);
  CHECK(complete_bipartite(2, 3).size() == 6);
  const Graph j = join_one(path(4));
  CHECK(j.order() == 5);
  CHECK(j.degree(0) == 4);
  CHECK(j.size() == 7);
  const Graph u = disjoint_union({path(2), cycle(3)});
  CHECK(u.order() == 5);
  CHECK(u.size() == 4);
  CHECK(component_count(u, u.vertices()) == 2);
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(Graph(0), error);
  CHECK_THROWS_AS(Graph(65), error);
  CHECK(Graph(64).order() == 64);
  try {
    Graph(65);
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_order);
  }
  CHECK_THROWS_AS(Graph(64).with_vertex(0), error);
}

TEST_CASE("edge edits report edge-state errors") {
  Graph g = path(3);
  try {
    (void)g.with_edge(0, 1);
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::edge_state);
  }
  try {
    (void)g.without_edge(0, 2);
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::edge_state);
  }
  CHECK_THROWS_AS(g.with_edge(1, 1), error);
  CHECK_THROWS_AS(g.with_edge(0, 3), error);
  CHECK(g.with_edge(0, 2) == cycle(3));
}

TEST_CASE("graph6 matches frozen reference strings") {
  // produced by networkx.to_graph6_bytes with header stripped
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(to_graph6(path(5)) == "DhC");
  CHECK(to_graph6(cycle(5)) == "Dhc");
  CHECK(to_graph6(complete(4)) == "C~");
  CHECK(to_graph6(star(5)) == "Ds_");
  const Graph petersen = Graph::from_edges(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                                {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
  CHECK(to_graph6(petersen) == "IheA@GUAo");
}

TEST_CASE("graph6 long form for n >= 63") {
  const std::string c63 = to_graph6(cycle(63));
  CHECK(c63.substr(0, 4) == "~??~");
  CHECK(from_graph6(c63) == cycle(63));
  const std::string p64 = to_graph6(path(64));
  CHECK(p64.substr(0, 4) == "~?@?");
  CHECK(from_graph6(p64) == path(64));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g = g.with_edge(u, v);
    const std::string s = to_graph6(g);
    REQUIRE(from_graph6(s) == g);
    CHECK(from_graph6(">>graph6<<" + s + "\n") == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), error);
  CHECK_THROWS_AS(from_graph6("Dh"), error);     // too short
  CHECK_THROWS_AS(from_graph6("DhCC"), error);   // too long
  CHECK_THROWS_AS(from_graph6("D h"), error);    // byte out of range
  CHECK_THROWS_AS(from_graph6("~?A?"), error);   // n = 65
  try {
    from_graph6("?");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse);
  }
}

TEST_CASE("cut vertices and blocks") {
  // two triangles sharing vertex 2, plus a pendant at 4
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}});
  CHECK(cut_vertices(g, g.vertices()) == (bit(2) | bit(4)));
  const auto blocks = biconnected_blocks(g, g.vertices());
  CHECK(blocks.size() == 2);
  CHECK(cut_vertices(path(4), path(4).vertices()) == (bit(1) | bit(2)));
  CHECK(cut_vertices(cycle(5), cycle(5).vertices()) == 0);
}

TEST_CASE("components and reach") {
  const Graph g = disjoint_union({path(3), Graph(1), cycle(4)});
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == 0b111);
  CHECK(comps[1] == 0b1000);
  CHECK(reach(g, 5, g.vertices()) == (0b1111u << 4));
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(join_one(g)));
}

TEST_CASE("permutation preserves structure") {
  const Graph g = join_one(disjoint_union({path(3), path(2)}));
  std::vector<int> perm = {5, 0, 4, 1, 3, 2};
  const Graph h = g.permuted(perm);
  CHECK(h.size() == g.size());
  for (const Edge& e : g.edges()) CHECK(h.has_edge(perm[e.a], perm[e.b]));
}
