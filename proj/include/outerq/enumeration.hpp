#pragma once

// Isomorph-free generation of small graph classes by canonical augmentation:
// a child is grown from its parent by one new vertex, and accepted only when
// the new vertex is equivalent to the child's canonical deletion vertex.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "outerq/canon.hpp"
#include "outerq/recognition.hpp"
#include "outerq/spectral.hpp"

namespace outerq {

struct EnumerationClass {
  int n = 1;
  std::optional<ForbiddenPattern> pattern;
  bool require_connected = true;
  bool require_outerplanar = true;
};

/// Practical bound for exhaustive runs.
constexpr int enumeration_limit = 10;

namespace detail {

/// Necessary conditions on the neighbourhood `s` of a new vertex for the
/// child to stay outerplanar: G[s] is a linear forest and no old vertex has
/// three neighbours in s.
inline bool plausible_outerplanar_extension(const Graph& parent, vset s) {
  if (!is_linear_forest(parent, s)) return false;
  for (int x = 0; x < parent.order(); ++x) {
    if (popcount(parent.neighbors(x) & s) > 2) return false;
  }
  return true;
}

/// Accepts `child` iff its last vertex lies in the orbit of the canonical
/// deletion vertex: the non-cut (when connected) vertex of least degree with
/// the smallest canonical position.
inline bool is_canonical_extension(const Graph& child, bool connected, const Labeling& lab) {
  const int last = child.order() - 1;
  vset candidates = child.vertices();
  if (connected && child.order() > 1) candidates &= ~cut_vertices(child, child.vertices());
  int min_deg = max_order;
  for_each_vertex(candidates, [&](int v) { min_deg = std::min(min_deg, child.degree(v)); });
  vset best = 0;
  for_each_vertex(candidates, [&](int v) {
    if (child.degree(v) == min_deg) best |= bit(v);
  });
  if (!contains(best, last)) return false;
  int chosen = -1;
  for_each_vertex(best, [&](int v) {
    if (chosen < 0 || lab.position[v] < lab.position[chosen]) chosen = v;
  });
  return chosen == last || same_orbit(child, last, chosen);
}

}  // namespace detail

/// Extends each parent by one vertex; returns the non-isomorphic children
/// (class predicates other than the pattern applied).
inline std::vector<Graph> augment_level(std::span<const Graph> parents, bool connected, bool outerplanar) {
  std::vector<Graph> out;
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
  for (const Graph& p : parents) {
    seen.clear();
    const int k = p.order();
    const int child_order = k + 1;
    const vset all = p.vertices();
    for (vset s = 0;; s = (s - all) & all) {  // every subset of V(p)
      const bool last = s == all;
      if (!(connected && s == 0)) {
        bool keep = true;
        if (outerplanar) {
          if (connected && p.size() + popcount(s) > 2 * child_order - 3 && child_order >= 2) keep = false;
          if (keep && !detail::plausible_outerplanar_extension(p, s)) keep = false;
        }
        if (keep) {
          Graph child = p.with_vertex(s);
          if (!outerplanar || is_outerplanar(child)) {
            Labeling lab = canonical_labeling(child);
            if (detail::is_canonical_extension(child, connected, lab) && seen.insert(lab.code).second) {
              out.push_back(child);
            }
          }
        }
      }
      if (last) break;
    }
  }
  return out;
}

/// All graphs of the class's order satisfying its structural predicates
/// (pattern not applied), one per isomorphism class.
inline std::vector<Graph> generate_structural(int n, bool connected, bool outerplanar) {
  if (n < 1) throw error(errc::invalid_order, "order must be >= 1");
  if (n > enumeration_limit) throw error(errc::capacity, "exhaustive enumeration is limited to n <= 10");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) level = augment_level(level, connected, outerplanar);
  return level;
}

/// Streams every member of the class to `emit`, pattern applied as a final
/// filter.
inline void enumerate(const EnumerationClass& cls, const std::function<void(const Graph&)>& emit) {
  for (const Graph& g : generate_structural(cls.n, cls.require_connected, cls.require_outerplanar)) {
    if (cls.pattern && contains_pattern(g, *cls.pattern)) continue;
    emit(g);
  }
}

inline std::vector<Graph> enumerate(const EnumerationClass& cls) {
  std::vector<Graph> out;
  enumerate(cls, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------- argmax

struct ArgmaxResult {
  std::vector<Graph> winners;
  std::vector<double> winner_q;
  double q = std::numeric_limits<double>::quiet_NaN();
  /// Gap between the maximum and the best graph outside the top group;
  /// +inf when every graph is in the top group.
  double margin = std::numeric_limits<double>::infinity();
  std::size_t class_size = 0;
  bool unique = false;  // exactly one winner with margin > sep
};

/// Top group of `graphs` by Q-index. `coarse_q` (optional) holds values
/// already solved to residual sep/10. Graphs within 4*sep of the maximum
/// are re-solved to sep/1000 before grouping.
inline ArgmaxResult extremal_argmax(std::span<const Graph> graphs, double sep = 1e-9,
                                    std::span<const double> coarse_q = {}) {
  ArgmaxResult out;
  out.class_size = graphs.size();
  if (graphs.empty()) return out;
  std::vector<double> q(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    q[i] = coarse_q.empty() ? q_index(graphs[i], sep / 10).q : coarse_q[i];
  }
  double qmax = *std::max_element(q.begin(), q.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (q[i] >= qmax - 4 * sep) q[i] = q_index(graphs[i], std::max(sep / 1000, 1e-13)).q;
  }
  qmax = *std::max_element(q.begin(), q.end());
  double runner_up = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (qmax - q[i] <= sep) {
      out.winners.push_back(graphs[i]);
      out.winner_q.push_back(q[i]);
    } else {
      runner_up = std::max(runner_up, q[i]);
    }
  }
  out.q = qmax;
  out.margin = std::isinf(runner_up) ? std::numeric_limits<double>::infinity() : qmax - runner_up;
  out.unique = out.winners.size() == 1 && out.margin > sep;
  return out;
}

inline ArgmaxResult extremal_argmax(const EnumerationClass& cls, double sep = 1e-9) {
  std::vector<Graph> graphs = enumerate(cls);
  return extremal_argmax(graphs, sep);
}

}  // namespace outerq
