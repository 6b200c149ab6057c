#pragma once

// Canonical labelling by individualisation-refinement: equitable partition
// refinement, exhaustive branching on the first non-singleton cell, and
// pruning of branches that are equivalent under twin transpositions or
// automorphisms discovered earlier in the search.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "outerq/graph.hpp"

namespace outerq {

/// Isomorphism-invariant identifier. Two graphs (with the same colouring
/// multiset, when coloured) have equal codes iff they are isomorphic.
struct CanonicalCode {
  std::string bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept { return std::hash<std::string>{}(c.bytes); }
};

struct Labeling {
  std::vector<int> position;  // vertex -> canonical position
  CanonicalCode code;
};

namespace detail {

using Rows = std::array<vset, max_order>;

class CanonSearch {
 public:
  CanonSearch(const Graph& g, std::span<const int> colors) : g_(g), n_(g.order()) {
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    if (!colors.empty()) {
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
      for (int i = 0; i < n_;) {
        vset cell = 0;
        int j = i;
        while (j < n_ && colors[order[j]] == colors[order[i]]) cell |= bit(order[j++]);
        root_.push_back(cell);
        i = j;
      }
    } else {
      root_.push_back(g.vertices());
    }
  }

  Labeling run() {
    std::vector<int> prefix;
    descend(root_, prefix);
    Labeling out;
    out.position.assign(n_, 0);
    for (int p = 0; p < n_; ++p) out.position[best_vertex_at_[p]] = p;
    out.code.bytes.push_back(static_cast<char>(n_));
    int acc = 0;
    int nbits = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        acc = (acc << 1) | static_cast<int>(contains(best_rows_[i], j));
        if (++nbits == 8) {
          out.code.bytes.push_back(static_cast<char>(acc));
          acc = nbits = 0;
        }
      }
    }
    if (nbits > 0) out.code.bytes.push_back(static_cast<char>(acc << (8 - nbits)));
    return out;
  }

 private:
  void refine(std::vector<vset>& cells) const {
    bool changed = true;
    std::vector<vset> next;
    std::vector<std::pair<std::vector<int>, int>> keyed;
    while (changed) {
      changed = false;
      next.clear();
      for (vset cell : cells) {
        if (popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for_each_vertex(cell, [&](int v) {
          std::vector<int> key(cells.size());
          for (std::size_t k = 0; k < cells.size(); ++k) key[k] = popcount(g_.neighbors(v) & cells[k]);
          keyed.emplace_back(std::move(key), v);
        });
        std::sort(keyed.begin(), keyed.end());
        std::size_t i = 0;
        std::size_t pieces = 0;
        while (i < keyed.size()) {
          vset piece = 0;
          std::size_t j = i;
          while (j < keyed.size() && keyed[j].first == keyed[i].first) piece |= bit(keyed[j++].second);
          next.push_back(piece);
          ++pieces;
          i = j;
        }
        if (pieces > 1) changed = true;
      }
      cells.swap(next);
    }
  }

  void descend(std::vector<vset> cells, std::vector<int>& prefix) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (popcount(cells[k]) > 1) {
        target = k;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const vset cell = cells[target];
    vset tried = 0;
    std::size_t autos_seen = static_cast<std::size_t>(-1);
    std::vector<int> orbit(n_);
    for_each_vertex(cell, [&](int v) {
      if (autos_seen != autos_.size()) {
        compute_orbits(prefix, orbit);
        autos_seen = autos_.size();
      }
      bool redundant = false;
      for_each_vertex(tried, [&](int w) {
        if (redundant) return;
        if (orbit[w] == orbit[v]) redundant = true;
        // (v w) is an automorphism fixing the prefix when v and w are twins.
        if ((g_.neighbors(v) & ~bit(w)) == (g_.neighbors(w) & ~bit(v))) redundant = true;
      });
      if (redundant) return;
      tried |= bit(v);
      std::vector<vset> child;
      child.reserve(cells.size() + 1);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k == target) {
          child.push_back(bit(v));
          child.push_back(cell & ~bit(v));
        } else {
          child.push_back(cells[k]);
        }
      }
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
    });
  }

  void compute_orbits(const std::vector<int>& prefix, std::vector<int>& orbit) const {
    std::iota(orbit.begin(), orbit.end(), 0);
    auto find = [&](int x) {
      while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
      return x;
    };
    for (const std::vector<int>& gamma : autos_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x);
        int b = find(gamma[x]);
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int x = 0; x < n_; ++x) orbit[x] = find(x);
  }

  void leaf(const std::vector<vset>& cells) {
    std::array<int, max_order> vertex_at{};
    std::array<int, max_order> pos{};
    for (int p = 0; p < n_; ++p) {
      vertex_at[p] = lowest(cells[p]);
      pos[vertex_at[p]] = p;
    }
    Rows rows{};
    for (int p = 0; p < n_; ++p) {
      vset r = 0;
      for_each_vertex(g_.neighbors(vertex_at[p]), [&](int w) { r |= bit(pos[w]); });
      rows[p] = r;
    }
    if (!have_best_) {
      have_best_ = true;
      best_rows_ = rows;
      best_vertex_at_ = vertex_at;
      return;
    }
    int cmp = 0;
    for (int p = 0; p < n_ && cmp == 0; ++p) {
      if (rows[p] != best_rows_[p]) cmp = rows[p] < best_rows_[p] ? -1 : 1;
    }
    if (cmp < 0) {
      best_rows_ = rows;
      best_vertex_at_ = vertex_at;
    } else if (cmp == 0) {
      std::vector<int> gamma(n_);
      for (int v = 0; v < n_; ++v) gamma[v] = best_vertex_at_[pos[v]];
      autos_.push_back(std::move(gamma));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<vset> root_;
  bool have_best_ = false;
  Rows best_rows_{};
  std::array<int, max_order> best_vertex_at_{};
  std::vector<std::vector<int>> autos_;
};

}  // namespace detail

/// Canonical labelling of `g`, optionally respecting a vertex colouring
/// (colour classes are kept in increasing colour order).
inline Labeling canonical_labeling(const Graph& g, std::span<const int> colors = {}) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
    throw error(errc::domain, "colouring length does not match the order");
  }
  Labeling out = detail::CanonSearch(g, colors).run();
  if (!colors.empty()) {
    std::vector<int> sorted(colors.begin(), colors.end());
    std::sort(sorted.begin(), sorted.end());
    for (int c : sorted) out.code.bytes.append(std::to_string(c)).push_back(',');
  }
  return out;
}

inline CanonicalCode canonical_code(const Graph& g) { return canonical_labeling(g).code; }

/// Graph relabelled into its canonical form.
inline Graph canonical_form(const Graph& g) { return g.permuted(canonical_labeling(g).position); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

/// Swapping u and v preserves adjacency.
inline bool are_twins(const Graph& g, int u, int v) {
  return (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u));
}

/// True iff some automorphism of `g` maps u to v.
inline bool same_orbit(const Graph& g, int u, int v) {
  if (u == v) return true;
  if (g.degree(u) != g.degree(v)) return false;
  if (are_twins(g, u, v)) return true;
  std::vector<int> cu(g.order(), 0);
  std::vector<int> cv(g.order(), 0);
  cu[u] = 1;
  cv[v] = 1;
  return canonical_labeling(g, cu).code == canonical_labeling(g, cv).code;
}

}  // namespace outerq
