#pragma once

// Fan-like graphs K1 v (P_a1 u ... u P_as), the conjectured extremal members
// for cycle-free and path-packing-free outerplanar classes, and the
// H(u; t, s) gadget.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "outerq/graph.hpp"
#include "outerq/recognition.hpp"

namespace outerq {

/// Path orders a1 >= a2 >= ... >= as >= 1 describing K1 v (u P_ai).
class PathJoinSpec {
 public:
  PathJoinSpec() = default;

  /// Zero parts are dropped; negative parts are rejected.
  explicit PathJoinSpec(std::vector<int> parts) {
    for (int p : parts) {
      if (p < 0) throw error(errc::parameter_domain, "negative path order in join spec");
      if (p > 0) parts_.push_back(p);
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int order() const { return total() + 1; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + "]";
  }

  friend bool operator==(const PathJoinSpec&, const PathJoinSpec&) = default;

 private:
  std::vector<int> parts_;
};

/// Recognition-based self checks run only up to this order; larger
/// constructions are built unchecked.
constexpr int construction_check_limit = 16;

/// K1 v (u P_ai); the join vertex is 0 and the paths follow in spec order.
inline Graph path_join(const PathJoinSpec& spec) {
  if (spec.total() > max_order - 1) throw error(errc::capacity, "path join order exceeds 64");
  if (spec.parts().empty()) return Graph(1);
  std::vector<Graph> paths;
  for (int a : spec.parts()) paths.push_back(path(a));
  return join_one(disjoint_union(paths));
}

struct CycleExtremal {
  Graph graph;
  int alpha = 0;
  int r = 0;
  PathJoinSpec spec;
};

/// K1 v (alpha P_{l-2} u P_r) with alpha = floor((n-1)/(l-2)), r = n-1-alpha(l-2).
inline CycleExtremal cycle_extremal(int n, int length) {
  if (length < 3 || length > n || n > max_order) {
    throw error(errc::parameter_domain, "cycle_extremal needs 3 <= l <= n <= 64");
  }
  CycleExtremal out;
  out.alpha = (n - 1) / (length - 2);
  out.r = n - 1 - out.alpha * (length - 2);
  std::vector<int> parts(static_cast<std::size_t>(out.alpha), length - 2);
  parts.push_back(out.r);
  out.spec = PathJoinSpec(parts);
  out.graph = path_join(out.spec);
  if (n <= construction_check_limit) {
    if (!is_connected(out.graph) || !is_outerplanar(out.graph) || contains_cycle(out.graph, length)) {
      throw error(errc::construction, "cycle_extremal(" + std::to_string(n) + "," + std::to_string(length) +
                                          ") is not a connected outerplanar C_l-free graph");
    }
  }
  return out;
}

/// The printed parameter formulas, evaluated verbatim for cross-checking.
struct PrintedPathFormula {
  int alpha = 0;
  int r = 0;
  int part_sum = 0;  // a1 + alpha * part + r
  bool well_formed = true;  // alpha >= 0 and r >= 0
};

struct PathExtremal {
  Graph graph;
  int first_part = 0;  // a1
  int part = 0;        // repeated path order
  int alpha = 0;
  int r = 0;
  PathJoinSpec spec;
  PrintedPathFormula printed;
  bool discrepancy = false;  // printed formulas disagree with the decomposition
};

inline PrintedPathFormula printed_path_formula(int n, int copies, int length) {
  PrintedPathFormula p;
  if (copies == 1) {
    const int b = (length - 2) / 2;
    const int a = (length - 1) / 2;  // ceil((l-2)/2)
    p.alpha = (n - length + 1) / b + 1;
    p.r = n - length + 1 - (p.alpha - 1) * b;
    p.part_sum = a + p.alpha * b + p.r;
  } else {
    const int a1 = copies * length - length - 1;
    p.alpha = (n - copies + 2) / (length - 1) - copies + 1;
    p.r = n - 2 * length + 2 - (p.alpha - 1) * (length - 1);
    p.part_sum = a1 + p.alpha * (length - 1) + p.r;
  }
  p.well_formed = p.alpha >= 0 && p.r >= 0;
  return p;
}

/// Canonical decomposition of n-1 = a1 + alpha * part + r with
/// a1 = ceil((l-2)/2), part = floor((l-2)/2) when t = 1, and
/// a1 = tl-l-1, part = l-1 when t >= 2.
inline PathExtremal path_extremal(int n, int copies, int length) {
  const bool ok_params = (copies == 1 && length >= 4) || (copies >= 2 && length >= 2);
  if (!ok_params || copies * length > n - 1 || n > max_order) {
    throw error(errc::parameter_domain, "path_extremal needs (t = 1, l >= 4) or (t >= 2, l >= 2) and tl <= n-1 <= 63");
  }
  PathExtremal out;
  if (copies == 1) {
    out.first_part = (length - 1) / 2;
    out.part = (length - 2) / 2;
  } else {
    out.first_part = copies * length - length - 1;
    out.part = length - 1;
  }
  const int rest = n - 1 - out.first_part;
  out.alpha = rest / out.part;
  out.r = rest - out.alpha * out.part;
  std::vector<int> parts(static_cast<std::size_t>(out.alpha), out.part);
  parts.push_back(out.first_part);
  parts.push_back(out.r);
  out.spec = PathJoinSpec(parts);
  out.graph = path_join(out.spec);

  out.printed = printed_path_formula(n, copies, length);
  out.discrepancy = !out.printed.well_formed || out.printed.part_sum != n - 1 || out.printed.alpha != out.alpha ||
                    out.printed.r != out.r;

  if (n <= construction_check_limit) {
    if (!is_connected(out.graph) || !is_outerplanar(out.graph) || contains_disjoint_paths(out.graph, copies, length)) {
      throw error(errc::construction, "path_extremal(" + std::to_string(n) + "," + std::to_string(copies) + "," +
                                          std::to_string(length) + ") contains tP_l or left the class");
    }
  }
  return out;
}

/// H(u; t, s): a copy of P_t and of P_s is attached, every new vertex joined
/// to u. With s = 0 only P_t is attached. New vertices are numbered after
/// those of h, P_t first.
inline Graph h_gadget(const Graph& h, int u, int t, int s) {
  if (t < 1 || s < 0) throw error(errc::parameter_domain, "h_gadget needs t >= 1 and s >= 0");
  if (u < 0 || u >= h.order()) throw error(errc::parameter_domain, "h_gadget: vertex out of range");
  if (h.order() + t + s > max_order) throw error(errc::capacity, "h_gadget order exceeds 64");
  std::vector<Edge> e = h.edges();
  const int base = h.order();
  for (int i = 0; i < t; ++i) {
    e.push_back({u, base + i});
    if (i > 0) e.push_back({base + i - 1, base + i});
  }
  for (int j = 0; j < s; ++j) {
    e.push_back({u, base + t + j});
    if (j > 0) e.push_back({base + t + j - 1, base + t + j});
  }
  return Graph::from_edges(base + t + s, e);
}

}  // namespace outerq
