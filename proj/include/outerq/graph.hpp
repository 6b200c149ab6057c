#pragma once

// Small simple undirected graphs (order <= 64) with one 64-bit adjacency row
// per vertex. Graphs are values: every "mutator" returns a fresh copy.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "outerq/error.hpp"

namespace outerq {

using vset = std::uint64_t;

constexpr int max_order = 64;

constexpr vset bit(int v) { return vset{1} << v; }
constexpr vset low_mask(int n) { return n >= 64 ? ~vset{0} : bit(n) - 1; }
constexpr int popcount(vset s) { return std::popcount(s); }
constexpr int lowest(vset s) { return std::countr_zero(s); }
constexpr bool contains(vset s, int v) { return (s >> v) & 1U; }

/// Calls `f(v)` for each vertex in `s`, in increasing order.
template <class F>
constexpr void for_each_vertex(vset s, F&& f) {
  while (s != 0) {
    int v = lowest(s);
    s &= s - 1;
    f(v);
  }
}

inline std::vector<int> to_vector(vset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

struct Edge {
  int a = 0;
  int b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  /// Edgeless graph on `n` vertices.
  explicit Graph(int n = 1) : n_(n) {
    if (n < 1 || n > max_order) {
      throw error(errc::invalid_order, "order must lie in [1, 64], got " + std::to_string(n));
    }
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
      g.check_pair(e.a, e.b);
      if (g.has_edge(e.a, e.b)) {
        throw error(errc::edge_state, "duplicate edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
      }
      g.link(e.a, e.b);
    }
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  vset vertices() const noexcept { return low_mask(n_); }

  int size() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
  }

  vset neighbors(int v) const noexcept { return adj_[v]; }
  vset closed_neighbors(int v) const noexcept { return adj_[v] | bit(v); }
  int degree(int v) const noexcept { return popcount(adj_[v]); }
  bool has_edge(int u, int v) const noexcept { return contains(adj_[u], v); }

  int max_degree() const noexcept {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for_each_vertex(adj_[u] & ~low_mask(u + 1), [&](int v) { out.push_back({u, v}); });
    }
    return out;
  }

  /// Number of edges with both ends in `s`.
  int edges_within(vset s) const noexcept {
    int twice = 0;
    for_each_vertex(s, [&](int v) { twice += popcount(adj_[v] & s); });
    return twice / 2;
  }

  /// Number of edges between disjoint sets `s` and `t`.
  int edges_between(vset s, vset t) const noexcept {
    int count = 0;
    for_each_vertex(s, [&](int v) { count += popcount(adj_[v] & t); });
    return count;
  }

  Graph with_edge(int u, int v) const {
    check_pair(u, v);
    if (has_edge(u, v)) {
      throw error(errc::edge_state, "edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    }
    Graph g = *this;
    g.link(u, v);
    return g;
  }

  Graph without_edge(int u, int v) const {
    check_pair(u, v);
    if (!has_edge(u, v)) {
      throw error(errc::edge_state, "edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    }
    Graph g = *this;
    g.unlink(u, v);
    return g;
  }

  /// Relabels vertex v as perm[v].
  Graph permuted(std::span<const int> perm) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
      for_each_vertex(adj_[u], [&](int v) { g.adj_[perm[u]] |= bit(perm[v]); });
    }
    return g;
  }

  /// Appends a vertex adjacent to `nbrs`; used by generators.
  Graph with_vertex(vset nbrs) const {
    if (n_ >= max_order) throw error(errc::capacity, "order would exceed 64");
    if ((nbrs & ~vertices()) != 0) throw error(errc::edge_state, "neighbor outside the graph");
    Graph g = *this;
    int v = g.n_++;
    g.adj_[v] = nbrs;
    for_each_vertex(nbrs, [&](int w) { g.adj_[w] |= bit(v); });
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    if (a.n_ != b.n_) return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw error(errc::edge_state, "vertex out of range");
    }
    if (u == v) throw error(errc::edge_state, "self-loop at " + std::to_string(u));
  }
  void link(int u, int v) noexcept {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  void unlink(int u, int v) noexcept {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  int n_;
  std::array<vset, max_order> adj_{};
};

// ---------------------------------------------------------------- builders

inline Graph path(int k) {
  if (k < 1 || k > max_order) throw error(errc::invalid_order, "path order must lie in [1, 64]");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(k, e);
}

inline Graph cycle(int k) {
  if (k < 3 || k > max_order) throw error(errc::invalid_order, "cycle order must lie in [3, 64]");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  return Graph::from_edges(k, e);
}

/// K_{1,k-1} with centre 0.
inline Graph star(int k) {
  if (k < 1 || k > max_order) throw error(errc::invalid_order, "star order must lie in [1, 64]");
  std::vector<Edge> e;
  for (int i = 1; i < k; ++i) e.push_back({0, i});
  return Graph::from_edges(k, e);
}

inline Graph complete(int k) {
  if (k < 1 || k > max_order) throw error(errc::invalid_order, "complete order must lie in [1, 64]");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.push_back({i, j});
  return Graph::from_edges(k, e);
}

inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1 || a + b > max_order) throw error(errc::invalid_order, "bad complete bipartite sides");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::from_edges(a + b, e);
}

/// Vertex-disjoint union; the vertices of gs[i] follow those of gs[i-1].
inline Graph disjoint_union(std::span<const Graph> gs) {
  int total = 0;
  for (const Graph& g : gs) total += g.order();
  if (gs.empty()) throw error(errc::invalid_order, "union of no graphs");
  if (total > max_order) throw error(errc::capacity, "union order " + std::to_string(total) + " exceeds 64");
  std::vector<Edge> e;
  int offset = 0;
  for (const Graph& g : gs) {
    for (Edge ed : g.edges()) e.push_back({ed.a + offset, ed.b + offset});
    offset += g.order();
  }
  return Graph::from_edges(total, e);
}

inline Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

/// K1 v g. The new vertex is 0; vertex v of g becomes v + 1.
inline Graph join_one(const Graph& g) {
  if (g.order() + 1 > max_order) throw error(errc::capacity, "join would exceed order 64");
  std::vector<Edge> e;
  for (int v = 0; v < g.order(); ++v) e.push_back({0, v + 1});
  for (Edge ed : g.edges()) e.push_back({ed.a + 1, ed.b + 1});
  return Graph::from_edges(g.order() + 1, e);
}

inline Graph add_edge(const Graph& g, int u, int v) { return g.with_edge(u, v); }
inline Graph remove_edge(const Graph& g, int u, int v) { return g.without_edge(u, v); }

/// G[S], with the vertices of S renumbered in increasing order.
inline Graph induced(const Graph& g, vset s) {
  s &= g.vertices();
  if (s == 0) throw error(errc::invalid_order, "induced subgraph on the empty set");
  std::array<int, max_order> index{};
  int k = 0;
  for_each_vertex(s, [&](int v) { index[v] = k++; });
  std::vector<Edge> e;
  for_each_vertex(s, [&](int u) {
    for_each_vertex(g.neighbors(u) & s & ~low_mask(u + 1), [&](int v) { e.push_back({index[u], index[v]}); });
  });
  return Graph::from_edges(k, e);
}

// ---------------------------------------------------------------- connectivity

/// Vertices reachable from `start` using only vertices of `within`.
inline vset reach(const Graph& g, int start, vset within) {
  vset seen = bit(start);
  vset frontier = seen;
  while (frontier != 0) {
    vset next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected_set(const Graph& g, vset s) {
  if (s == 0) return false;
  return reach(g, lowest(s), s) == s;
}

inline bool is_connected(const Graph& g) { return is_connected_set(g, g.vertices()); }

/// Vertex sets of the components of G[within].
inline std::vector<vset> components(const Graph& g, vset within) {
  std::vector<vset> out;
  while (within != 0) {
    vset c = reach(g, lowest(within), within);
    out.push_back(c);
    within &= ~c;
  }
  return out;
}

inline std::vector<vset> components(const Graph& g) { return components(g, g.vertices()); }

/// Calls `f(component)` for each component of G[within]; no allocation.
template <class F>
void for_each_component(const Graph& g, vset within, F&& f) {
  while (within != 0) {
    vset c = reach(g, lowest(within), within);
    within &= ~c;
    f(c);
  }
}

inline int component_count(const Graph& g, vset within) {
  int k = 0;
  for_each_component(g, within, [&](vset) { ++k; });
  return k;
}

/// Cut vertices of G[within] (articulation points, Hopcroft-Tarjan lowpoints).
inline vset cut_vertices(const Graph& g, vset within) {
  std::array<int, max_order> disc{};
  std::array<int, max_order> low{};
  disc.fill(-1);
  vset cuts = 0;
  int timer = 0;
  struct Frame {
    int v;
    int parent;
    vset pending;
    int children;
  };
  std::vector<Frame> stack;
  for_each_vertex(within, [&](int root) {
    if (disc[root] >= 0) return;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, g.neighbors(root) & within, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.pending != 0) {
        int w = lowest(f.pending);
        f.pending &= f.pending - 1;
        if (disc[w] < 0) {
          ++f.children;
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, g.neighbors(w) & within, 0});
        } else if (w != f.parent) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (p.parent >= 0 && low[done.v] >= disc[p.v]) cuts |= bit(p.v);
      } else if (done.children > 1) {
        cuts |= bit(done.v);
      }
    }
  });
  return cuts;
}

/// Vertex sets of the biconnected blocks of G[within] with at least 3 vertices.
inline std::vector<vset> biconnected_blocks(const Graph& g, vset within) {
  std::array<int, max_order> disc{};
  std::array<int, max_order> low{};
  disc.fill(-1);
  std::vector<vset> blocks;
  std::vector<Edge> edge_stack;
  int timer = 0;
  struct Frame {
    int v;
    int parent;
    vset pending;
  };
  std::vector<Frame> stack;
  for_each_vertex(within, [&](int root) {
    if (disc[root] >= 0) return;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, g.neighbors(root) & within});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.pending != 0) {
        int w = lowest(f.pending);
        f.pending &= f.pending - 1;
        if (disc[w] < 0) {
          edge_stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, g.neighbors(w) & within});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = stack.back();
      stack.pop_back();
      if (stack.empty()) break;
      Frame& p = stack.back();
      low[p.v] = std::min(low[p.v], low[done.v]);
      if (low[done.v] >= disc[p.v]) {
        vset block = 0;
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block |= bit(e.a) | bit(e.b);
          if (e.a == p.v && e.b == done.v) break;
        }
        if (popcount(block) >= 3) blocks.push_back(block);
      }
    }
  });
  return blocks;
}

// ---------------------------------------------------------------- graph6

/// Encodes `g` in graph6 (no header, no newline).
inline std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

/// Decodes one graph6 line. Accepts an optional ">>graph6<<" header and
/// trailing whitespace.
inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw error(errc::parse, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw error(errc::parse, "graph6 byte out of range");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw error(errc::parse, "graph6 order field unsupported (n > 64)");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n < 1 || n > max_order) throw error(errc::parse, "graph6 order " + std::to_string(n) + " outside [1, 64]");
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes) throw error(errc::parse, "graph6 length mismatch");
  std::vector<Edge> e;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) e.push_back({i, j});
    }
  }
  return Graph::from_edges(n, e);
}

}  // namespace outerq
