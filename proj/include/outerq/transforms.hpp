#pragma once

// Edge rewrites that strictly increase the Q-index under structural (and,
// for the rotation, Perron-vector) hypotheses, plus a deterministic greedy
// ascent that applies them while staying inside a graph class.

#include <optional>
#include <string>
#include <vector>

#include "outerq/canon.hpp"
#include "outerq/constructions.hpp"
#include "outerq/recognition.hpp"
#include "outerq/spectral.hpp"

namespace outerq {

enum class MoveKind { AddEdge, PerronRotate, LeafReattach, PendantPull, ChordSwap, PathShift };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::AddEdge: return "AddEdge";
    case MoveKind::PerronRotate: return "PerronRotate";
    case MoveKind::LeafReattach: return "LeafReattach";
    case MoveKind::PendantPull: return "PendantPull";
    case MoveKind::ChordSwap: return "ChordSwap";
    case MoveKind::PathShift: return "PathShift";
  }
  return "?";
}

/// A rewrite with its role-labelled vertices and the edge edits it makes.
///   AddEdge      (u, v)            +uv
///   PerronRotate (u, v, w)         -vw +uw
///   LeafReattach (u, v, w)         -vw +uw
///   PendantPull  (u, w1, w2)       -w1w2 +uw1
///   ChordSwap    (u, w, v1, v2)    -v1v2 +uw
///   PathShift    (u, a, b, b2)     -b b2 +ab   (a ends the longer fan path,
///                                               b ends the shorter, b2 = -1 if s = 1)
struct TransformMove {
  MoveKind kind = MoveKind::AddEdge;
  std::vector<int> vertices;
  std::vector<Edge> removed;
  std::vector<Edge> added;
};

inline Graph apply(const Graph& g, const TransformMove& m) {
  Graph out = g;
  for (Edge e : m.removed) out = out.without_edge(e.a, e.b);
  for (Edge e : m.added) out = out.with_edge(e.a, e.b);
  return out;
}

enum class FailureKind { Structural, PerronVector };

struct PreconditionFailure {
  FailureKind kind = FailureKind::Structural;
  std::string clause;
};

class precondition_error : public error {
 public:
  explicit precondition_error(PreconditionFailure f)
      : error(errc::precondition, f.clause), failure_(std::move(f)) {}
  const PreconditionFailure& failure() const noexcept { return failure_; }

 private:
  PreconditionFailure failure_;
};

namespace detail {

inline std::optional<PreconditionFailure> structural(std::string clause) {
  return PreconditionFailure{FailureKind::Structural, std::move(clause)};
}

inline bool valid_vertex(const Graph& g, int v) { return v >= 0 && v < g.order(); }

inline bool subset(vset a, vset b) { return (a & ~b) == 0; }

}  // namespace detail

/// Minimum x_u - x_v accepted as "x_u >= x_v" without an exact symmetry.
constexpr double perron_margin = 1e-10;

// ---------------------------------------------------------------- add edge

inline std::optional<PreconditionFailure> check_add_edge(const Graph& g, int u, int v) {
  if (!detail::valid_vertex(g, u) || !detail::valid_vertex(g, v) || u == v) return detail::structural("u, v distinct vertices");
  if (g.has_edge(u, v)) return detail::structural("uv not in E(G)");
  if (!is_connected(g)) return detail::structural("G connected");
  return std::nullopt;
}

inline TransformMove add_edge_plan(int u, int v) { return {MoveKind::AddEdge, {u, v}, {}, {{u, v}}}; }

/// G + uv.
inline Graph add_edge_move(const Graph& g, int u, int v) {
  if (!detail::valid_vertex(g, u) || !detail::valid_vertex(g, v) || u == v || g.has_edge(u, v)) {
    throw error(errc::edge_state, "add_edge_move needs a non-edge uv");
  }
  if (auto f = check_add_edge(g, u, v)) throw precondition_error(*f);
  return g.with_edge(u, v);
}

// ---------------------------------------------------------------- Perron rotation

inline std::optional<PreconditionFailure> check_perron_rotate(const Graph& g, int u, int v, int w,
                                                              const SpectralResult& perron) {
  if (!detail::valid_vertex(g, u) || !detail::valid_vertex(g, v) || !detail::valid_vertex(g, w) || u == v || u == w ||
      v == w) {
    return detail::structural("u, v, w distinct vertices");
  }
  if (!is_connected(g)) return detail::structural("G connected");
  if (g.has_edge(u, w)) return detail::structural("uw not in E(G)");
  if (!g.has_edge(v, w)) return detail::structural("vw in E(G)");
  const double gap = perron.x[u] - perron.x[v];
  if (gap > perron_margin) return std::nullopt;
  if (gap > -perron_margin && same_orbit(g, u, v)) return std::nullopt;
  return PreconditionFailure{FailureKind::PerronVector, "x_u >= x_v (gap " + std::to_string(gap) + ")"};
}

inline TransformMove perron_rotate_plan(int u, int v, int w) {
  return {MoveKind::PerronRotate, {u, v, w}, {{v, w}}, {{u, w}}};
}

/// G - vw + uw, provided the Perron vector has x_u >= x_v.
inline Graph perron_rotate(const Graph& g, int u, int v, int w) {
  SpectralResult perron = q_index(g);
  if (auto f = check_perron_rotate(g, u, v, w, perron)) throw precondition_error(*f);
  return apply(g, perron_rotate_plan(u, v, w));
}

// ---------------------------------------------------------------- leaf reattachment

inline std::optional<PreconditionFailure> check_leaf_reattach(const Graph& g, int u, int v, int w) {
  if (!detail::valid_vertex(g, u) || !detail::valid_vertex(g, v) || !detail::valid_vertex(g, w) || u == v || u == w ||
      v == w) {
    return detail::structural("u, v, w distinct vertices");
  }
  if (!is_connected(g)) return detail::structural("G connected");
  if (!g.has_edge(u, v)) return detail::structural("v in N(u)");
  if (g.degree(v) > g.degree(u) - 2) return detail::structural("d(v) <= d(u) - 2");
  const vset outside = g.neighbors(v) & ~g.closed_neighbors(u);
  if (!contains(outside, w)) return detail::structural("w in N(v) \\ N[u]");
  const int k = popcount(outside);
  if (k != 1 && k != 2) return detail::structural("|N(v) \\ N[u]| in {1, 2}");
  const vset allowed = g.neighbors(v) & ~g.neighbors(u);
  bool ok = true;
  for_each_vertex(outside, [&](int z) {
    if (!detail::subset(g.neighbors(z) & ~bit(v), allowed)) ok = false;
  });
  if (!ok) return detail::structural("N(z) \\ {v} subset of N(v) \\ N(u) for z in N(v) \\ N[u]");
  return std::nullopt;
}

inline TransformMove leaf_reattach_plan(int u, int v, int w) {
  return {MoveKind::LeafReattach, {u, v, w}, {{v, w}}, {{u, w}}};
}

/// G - vw + uw.
inline Graph leaf_reattach(const Graph& g, int u, int v, int w) {
  if (auto f = check_leaf_reattach(g, u, v, w)) throw precondition_error(*f);
  return apply(g, leaf_reattach_plan(u, v, w));
}

// ---------------------------------------------------------------- pendant pull

inline std::optional<PreconditionFailure> check_pendant_pull(const Graph& g, int u, int w1, int w2) {
  if (!detail::valid_vertex(g, u) || !detail::valid_vertex(g, w1) || !detail::valid_vertex(g, w2) || u == w1 ||
      u == w2 || w1 == w2) {
    return detail::structural("u, w1, w2 distinct vertices");
  }
  if (!is_connected(g)) return detail::structural("G connected");
  const vset closed = g.closed_neighbors(u);
  if (contains(closed, w1) || contains(closed, w2)) return detail::structural("w1, w2 not in N[u]");
  if (!detail::subset(g.neighbors(w2) & ~bit(w1), g.neighbors(u))) return detail::structural("N(w2) \\ {w1} subset of N(u)");
  if (g.neighbors(w1) != bit(w2)) return detail::structural("N(w1) = {w2}");
  if (g.degree(u) < g.degree(w2) + 1) return detail::structural("d(u) >= d(w2) + 1");
  return std::nullopt;
}

inline TransformMove pendant_pull_plan(int u, int w1, int w2) {
  return {MoveKind::PendantPull, {u, w1, w2}, {{w1, w2}}, {{u, w1}}};
}

/// G - w1w2 + uw1.
inline Graph pendant_pull(const Graph& g, int u, int w1, int w2) {
  if (auto f = check_pendant_pull(g, u, w1, w2)) throw precondition_error(*f);
  return apply(g, pendant_pull_plan(u, w1, w2));
}

// ---------------------------------------------------------------- chord swap

inline std::optional<PreconditionFailure> check_chord_swap(const Graph& g, int u, int w, int v1, int v2) {
  const int vs[] = {u, w, v1, v2};
  for (int i = 0; i < 4; ++i) {
    if (!detail::valid_vertex(g, vs[i])) return detail::structural("u, w, v1, v2 distinct vertices");
    for (int j = 0; j < i; ++j) {
      if (vs[i] == vs[j]) return detail::structural("u, w, v1, v2 distinct vertices");
    }
  }
  if (!is_connected(g)) return detail::structural("G connected");
  if (!neighborhood_is_paths(g, u)) return detail::structural("G[N(u)] consists of paths");
  if (g.degree(u) < 5) return detail::structural("d(u) >= 5 (got d(u) = " + std::to_string(g.degree(u)) + ")");
  if (contains(g.closed_neighbors(u), w)) return detail::structural("w not in N[u]");
  if (g.neighbors(w) != (bit(v1) | bit(v2))) return detail::structural("N(w) = {v1, v2}");
  if (!g.has_edge(u, v1) || !g.has_edge(u, v2)) return detail::structural("v1, v2 in N(u)");
  if (!g.has_edge(v1, v2)) return detail::structural("v1v2 in E(G)");
  const vset blocked = g.closed_neighbors(u) | bit(w);
  if ((g.neighbors(v1) & ~blocked) != 0 || (g.neighbors(v2) & ~blocked) != 0) {
    return detail::structural("N(vi) \\ (N[u] u {w}) empty");
  }
  return std::nullopt;
}

inline TransformMove chord_swap_plan(int u, int w, int v1, int v2) {
  return {MoveKind::ChordSwap, {u, w, v1, v2}, {{v1, v2}}, {{u, w}}};
}

/// G - v1v2 + uw.
inline Graph chord_swap(const Graph& g, int u, int w, int v1, int v2) {
  if (auto f = check_chord_swap(g, u, w, v1, v2)) throw precondition_error(*f);
  return apply(g, chord_swap_plan(u, w, v1, v2));
}

// ---------------------------------------------------------------- path shift

/// H(u; t, s) -> H(u; t+1, s-1) for t >= s >= 1.
inline Graph path_shift(const Graph& h, int u, int t, int s) {
  if (s < 1 || t < s) throw precondition_error({FailureKind::Structural, "t >= s >= 1"});
  return h_gadget(h, u, t + 1, s - 1);
}

struct FanPath {
  vset vertices = 0;
  int end_a = -1;  // endpoints; equal when the path has one vertex
  int end_b = -1;
};

/// Components of G[N(u)] that are paths whose vertices see nothing outside
/// the path and u: the fan paths of a gadget H(u; ...).
inline std::vector<FanPath> fan_paths(const Graph& g, int u) {
  std::vector<FanPath> out;
  const vset nu = g.neighbors(u);
  for (vset c : components(g, nu)) {
    if (!is_linear_forest(g, c)) continue;
    bool isolated = true;
    for_each_vertex(c, [&](int v) {
      if ((g.neighbors(v) & ~(c | bit(u))) != 0) isolated = false;
    });
    if (!isolated) continue;
    FanPath p;
    p.vertices = c;
    for_each_vertex(c, [&](int v) {
      if (popcount(g.neighbors(v) & c) <= 1) (p.end_a < 0 ? p.end_a : p.end_b) = v;
    });
    if (p.end_b < 0) p.end_b = p.end_a;
    out.push_back(p);
  }
  return out;
}

/// Rewrite taking fan paths `longer` (t vertices) and `shorter` (s <= t)
/// at u to lengths t+1 and s-1.
inline TransformMove path_shift_plan(const Graph& g, int u, const FanPath& longer, const FanPath& shorter) {
  const int a = longer.end_a;
  const int b = shorter.end_a;
  TransformMove m{MoveKind::PathShift, {u, a, b, -1}, {}, {{a, b}}};
  if (popcount(shorter.vertices) > 1) {
    const int b2 = lowest(g.neighbors(b) & shorter.vertices);
    m.vertices[3] = b2;
    m.removed.push_back({b, b2});
  }
  return m;
}

// ---------------------------------------------------------------- greedy ascent

struct AscentStep {
  TransformMove move;
  double q_before = 0.0;
  double q_after = 0.0;
  std::string graph6;  // graph after the move
};

struct AscentResult {
  Graph graph;
  std::vector<AscentStep> trace;
  bool local_maximum = false;  // stopped because no move applied
};

namespace detail {

/// Calls `f(move)` for every applicable move of `g` in the fixed scan order;
/// stops when `f` returns true.
template <class F>
bool scan_moves(const Graph& g, const SpectralResult& perron, F&& f) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && f(add_edge_plan(u, v))) return true;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (u != v && u != w && v != w && !g.has_edge(u, w) && g.has_edge(v, w) &&
            !check_perron_rotate(g, u, v, w, perron) && f(perron_rotate_plan(u, v, w)))
          return true;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (!check_leaf_reattach(g, u, v, w) && f(leaf_reattach_plan(u, v, w))) return true;
  for (int u = 0; u < n; ++u)
    for (int w1 = 0; w1 < n; ++w1)
      for (int w2 = 0; w2 < n; ++w2)
        if (!check_pendant_pull(g, u, w1, w2) && f(pendant_pull_plan(u, w1, w2))) return true;
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) < 5) continue;
    for (int w = 0; w < n; ++w)
      for (int v1 = 0; v1 < n; ++v1)
        for (int v2 = v1 + 1; v2 < n; ++v2)
          if (!check_chord_swap(g, u, w, v1, v2) && f(chord_swap_plan(u, w, v1, v2))) return true;
  }
  for (int u = 0; u < n; ++u) {
    std::vector<FanPath> fans = fan_paths(g, u);
    for (std::size_t i = 0; i < fans.size(); ++i)
      for (std::size_t j = 0; j < fans.size(); ++j) {
        if (i == j || popcount(fans[i].vertices) < popcount(fans[j].vertices)) continue;
        if (f(path_shift_plan(g, u, fans[i], fans[j]))) return true;
      }
  }
  return false;
}

}  // namespace detail

/// Applies the first move (fixed scan order) whose result stays connected,
/// outerplanar and pattern-free and whose Q-index increase is certified by
/// q_compare; repeats until no move applies or `max_steps` is reached.
inline AscentResult greedy_ascent(const Graph& start, const std::optional<ForbiddenPattern>& pattern, int max_steps,
                                  double sep = 1e-9) {
  AscentResult out{start, {}, false};
  for (int step = 0; step < max_steps; ++step) {
    const Graph& g = out.graph;
    const SpectralResult perron = q_index(g, sep / 10);
    std::optional<AscentStep> chosen;
    Graph next = g;
    detail::scan_moves(g, perron, [&](const TransformMove& m) {
      Graph h = apply(g, m);
      if (!is_connected(h)) return false;
      if (pattern && contains_pattern(h, *pattern)) return false;
      if (!is_outerplanar(h)) return false;
      QComparison c = q_compare(h, g, sep);
      if (c.order != Ordering::Greater) return false;
      chosen = AscentStep{m, c.q2, c.q1, to_graph6(h)};
      next = h;
      return true;
    });
    if (!chosen) {
      out.local_maximum = true;
      return out;
    }
    out.trace.push_back(*chosen);
    out.graph = next;
  }
  return out;
}

}  // namespace outerq
