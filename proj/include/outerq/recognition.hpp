#pragma once

// Outerplanarity via the forbidden minors K4 and K2,3, fixed-length cycle
// containment, disjoint path packings, and the local neighbourhood
// predicates satisfied by every outerplanar graph.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "outerq/graph.hpp"

namespace outerq {

// ---------------------------------------------------------------- patterns

enum class PatternKind { Cycle, PathUnion };

/// C_l (copies == 1) or the disjoint union of `copies` paths on `length` vertices.
class ForbiddenPattern {
 public:
  static ForbiddenPattern cycle(int length) {
    if (length < 3) throw error(errc::invalid_pattern, "cycle length must be >= 3");
    return ForbiddenPattern(PatternKind::Cycle, 1, length);
  }
  static ForbiddenPattern paths(int copies, int length) {
    if (copies < 1 || length < 2) throw error(errc::invalid_pattern, "path union needs t >= 1 and l >= 2");
    return ForbiddenPattern(PatternKind::PathUnion, copies, length);
  }

  /// Parses "C<l>", "P<l>" or "<t>P<l>"; "<t>K2" is accepted as <t>P2.
  static ForbiddenPattern parse(std::string_view text) {
    auto number = [&](std::string_view s) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw error(errc::invalid_pattern, "cannot parse pattern '" + std::string(text) + "'");
      }
      return value;
    };
    if (text.empty()) throw error(errc::invalid_pattern, "empty pattern");
    if (text[0] == 'C' || text[0] == 'c') return cycle(number(text.substr(1)));
    std::size_t p = text.find_first_of("PpK");
    if (p == std::string_view::npos) throw error(errc::invalid_pattern, "cannot parse pattern '" + std::string(text) + "'");
    int t = p == 0 ? 1 : number(text.substr(0, p));
    int l = number(text.substr(p + 1));
    if (text[p] == 'K' && l != 2) throw error(errc::invalid_pattern, "only K2 is accepted as a path");
    return paths(t, l);
  }

  PatternKind kind() const noexcept { return kind_; }
  int copies() const noexcept { return copies_; }
  int length() const noexcept { return length_; }
  int order() const noexcept { return copies_ * length_; }

  std::string to_string() const {
    if (kind_ == PatternKind::Cycle) return "C" + std::to_string(length_);
    return (copies_ == 1 ? std::string() : std::to_string(copies_)) + "P" + std::to_string(length_);
  }

  friend bool operator==(const ForbiddenPattern&, const ForbiddenPattern&) = default;

 private:
  ForbiddenPattern(PatternKind k, int t, int l) : kind_(k), copies_(t), length_(l) {}

  PatternKind kind_;
  int copies_;
  int length_;
};

enum class MinorPattern { K4, K23 };

// ---------------------------------------------------------------- minors

namespace detail {

/// Visits every connected subset of `allowed` that contains `root` and has
/// at most `max_size` vertices, each exactly once. Stops when `visit`
/// returns true.
template <class Visit>
bool grow_connected(const Graph& g, vset allowed, vset current, vset excluded, int max_size, Visit& visit) {
  if (visit(current)) return true;
  if (popcount(current) >= max_size) return false;
  vset frontier = 0;
  for_each_vertex(current, [&](int v) { frontier |= g.neighbors(v); });
  frontier &= allowed & ~current & ~excluded;
  vset local = excluded;
  bool found = false;
  for_each_vertex(frontier, [&](int c) {
    if (found) return;
    found = grow_connected(g, allowed, current | bit(c), local, max_size, visit);
    local |= bit(c);
  });
  return found;
}

template <class Visit>
bool for_each_connected_subset(const Graph& g, vset allowed, int root, int max_size, Visit visit) {
  return grow_connected(g, allowed, bit(root), 0, max_size, visit);
}

inline vset touching(const Graph& g, vset s) {
  vset n = 0;
  for_each_vertex(s, [&](int v) { n |= g.neighbors(v); });
  return n & ~s;
}

/// Partition search for a K4 or K2,3 model inside a connected vertex set.
/// Any model in a connected host extends to a partition of the host into
/// connected branch sets, so only partitions are searched. Branch sets are
/// created in increasing order of their smallest vertex; for K2,3 each set
/// also carries a side (hub or spoke), and hubs must touch every spoke.
class MinorSearch {
 public:
  MinorSearch(const Graph& g, MinorPattern h) : g_(g), h_(h) {}

  bool in(vset host) {
    parts_.clear();
    hubs_.clear();
    return extend(host);
  }

 private:
  int total_parts() const { return h_ == MinorPattern::K4 ? 4 : 5; }

  bool can_split(vset rest, int left) const {
    if (left == 0) return rest == 0;
    if (popcount(rest) < left) return false;
    return component_count(g_, rest) <= left;
  }

  bool extend(vset remaining) {
    const int left = total_parts() - static_cast<int>(parts_.size());
    const int max_size = popcount(remaining) - (left - 1);
    if (left == 1) return is_connected_set(g_, remaining) && try_part(remaining, remaining, 1);
    const int v = lowest(remaining);
    auto visit = [&](vset s) { return try_part(remaining, s, left); };
    return for_each_connected_subset(g_, remaining, v, max_size, visit);
  }

  bool try_part(vset remaining, vset s, int left) {
    const vset rest = remaining & ~s;
    if (!can_split(rest, left - 1)) return false;
    const vset ns = touching(g_, s);
    if (h_ == MinorPattern::K4) {
      for (vset p : parts_) {
        if ((ns & p) == 0) return false;
      }
      if (left > 1) {
        // every later branch set lies in one component of `rest` and must
        // touch s and every earlier set
        bool ok = true;
        for_each_component(g_, rest, [&](vset c) {
          if (!ok) return;
          vset nc = touching(g_, c);
          if ((nc & s) == 0) ok = false;
          for (vset p : parts_) {
            if ((nc & p) == 0) ok = false;
          }
        });
        if (!ok) return false;
      }
      parts_.push_back(s);
      bool ok = left == 1 ? true : extend(rest);
      parts_.pop_back();
      return ok;
    }
    int hubs_used = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) hubs_used += hubs_[i] ? 1 : 0;
    const int spokes_used = static_cast<int>(parts_.size()) - hubs_used;
    for (int side = 0; side < 2; ++side) {
      const bool hub = side == 0;
      if (hub && hubs_used >= 2) continue;
      if (!hub && spokes_used >= 3) continue;
      bool ok = true;
      for (std::size_t i = 0; i < parts_.size() && ok; ++i) {
        if (hubs_[i] != hub && (ns & parts_[i]) == 0) ok = false;
      }
      if (!ok) continue;
      parts_.push_back(s);
      hubs_.push_back(hub);
      // a component of `rest` missing some hub holds only hubs, one missing
      // some spoke holds only spokes; missing both is infeasible
      if (left > 1) {
        for_each_component(g_, rest, [&](vset c) {
          if (!ok) return;
          const vset nc = touching(g_, c);
          bool misses_hub = false;
          bool misses_spoke = false;
          for (std::size_t i = 0; i < parts_.size(); ++i) {
            if ((nc & parts_[i]) == 0) (hubs_[i] ? misses_hub : misses_spoke) = true;
          }
          if (misses_hub && misses_spoke) ok = false;
        });
      }
      bool found = ok && (left == 1 ? true : extend(rest));
      parts_.pop_back();
      hubs_.pop_back();
      if (found) return true;
    }
    return false;
  }

  const Graph& g_;
  MinorPattern h_;
  std::vector<vset> parts_;
  std::vector<char> hubs_;
};

/// Repeatedly strips vertices of degree <= 1 inside `s`.
inline vset two_core(const Graph& g, vset s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for_each_vertex(s, [&](int v) {
      if (popcount(g.neighbors(v) & s) <= 1) {
        s &= ~bit(v);
        changed = true;
      }
    });
  }
  return s;
}

}  // namespace detail

/// True iff `h` is a minor of `g`. Both patterns are 2-connected, so the
/// search runs per biconnected block of the 2-core.
inline bool has_minor(const Graph& g, MinorPattern h) {
  const int k = h == MinorPattern::K4 ? 4 : 5;
  const int need_edges = 6;  // |E(K4)| == |E(K2,3)|
  const vset core = detail::two_core(g, g.vertices());
  detail::MinorSearch search(g, h);
  for (vset block : biconnected_blocks(g, core)) {
    if (popcount(block) < k) continue;
    if (g.edges_within(block) < need_edges) continue;
    // a 2-connected block is a cycle or contains a vertex of degree >= 3
    if (g.edges_within(block) == popcount(block)) continue;
    if (search.in(block)) return true;
  }
  return false;
}

inline bool has_minor(const Graph& g, std::string_view pattern) {
  if (pattern == "K4") return has_minor(g, MinorPattern::K4);
  if (pattern == "K23" || pattern == "K2,3") return has_minor(g, MinorPattern::K23);
  throw error(errc::unsupported_pattern, "unsupported minor pattern '" + std::string(pattern) + "'");
}

/// Outerplanar iff neither K4 nor K2,3 is a minor. Components with more than
/// 2n'-3 edges are rejected up front.
inline bool is_outerplanar(const Graph& g) {
  for (vset c : components(g)) {
    int nc = popcount(c);
    if (nc >= 2 && g.edges_within(c) > 2 * nc - 3) return false;
  }
  return !has_minor(g, MinorPattern::K4) && !has_minor(g, MinorPattern::K23);
}

// ---------------------------------------------------------------- cycles

namespace detail {

inline bool close_cycle(const Graph& g, int start, int current, vset used, vset allowed, int remaining) {
  if (remaining == 0) return g.has_edge(current, start);
  vset next = g.neighbors(current) & allowed & ~used;
  bool found = false;
  for_each_vertex(next, [&](int w) {
    if (!found) found = close_cycle(g, start, w, used | bit(w), allowed, remaining - 1);
  });
  return found;
}

}  // namespace detail

/// True iff `g` has a (not necessarily induced) cycle on exactly `length`
/// vertices. Each candidate cycle is anchored at its smallest vertex.
inline bool contains_cycle(const Graph& g, int length) {
  if (length < 3) throw error(errc::invalid_pattern, "cycle length must be >= 3");
  if (length > g.order()) return false;
  for (int s = 0; s < g.order(); ++s) {
    const vset allowed = g.vertices() & ~low_mask(s + 1);
    if (popcount(allowed) < length - 1) break;
    if (detail::close_cycle(g, s, s, bit(s), allowed, length - 1)) return true;
  }
  return false;
}

// ---------------------------------------------------------------- path packings

namespace detail {

class PathPacking {
 public:
  PathPacking(const Graph& g, int length) : g_(g), len_(length) {}

  bool pack(vset available, int copies, int min_vertex) {
    if (copies == 0) return true;
    if (popcount(available) < copies * len_) return false;
    vset starts = available & ~low_mask(min_vertex);
    bool found = false;
    for_each_vertex(starts, [&](int m) {
      if (found) return;
      const vset allowed = available & ~low_mask(m);
      if (popcount(allowed) < copies * len_) return;
      // paths whose smallest vertex is m: grow a right arm from m, then a left arm
      found = right_arm(m, m, bit(m), allowed, 1, [&](vset path) {
        return pack(available & ~path, copies - 1, m + 1);
      });
    });
    return found;
  }

 private:
  template <class Done>
  bool right_arm(int anchor, int end, vset used, vset allowed, int size, const Done& done) {
    if (left_arm(anchor, used, allowed, size, done)) return true;
    if (size == len_) return false;
    vset next = g_.neighbors(end) & allowed & ~used;
    bool found = false;
    for_each_vertex(next, [&](int w) {
      if (!found) found = right_arm(anchor, w, used | bit(w), allowed, size + 1, done);
    });
    return found;
  }

  template <class Done>
  bool left_arm(int end, vset used, vset allowed, int size, const Done& done) {
    if (size == len_) return done(used);
    vset next = g_.neighbors(end) & allowed & ~used;
    bool found = false;
    for_each_vertex(next, [&](int w) {
      if (!found) found = left_arm(w, used | bit(w), allowed, size + 1, done);
    });
    return found;
  }

  const Graph& g_;
  int len_;
};

}  // namespace detail

/// True iff `g` contains `copies` vertex-disjoint paths, each on exactly
/// `length` vertices. Paths are placed in increasing order of their
/// smallest vertex.
inline bool contains_disjoint_paths(const Graph& g, int copies, int length) {
  if (copies < 1 || length < 2) throw error(errc::invalid_pattern, "path union needs t >= 1 and l >= 2");
  if (copies * length > g.order()) return false;
  detail::PathPacking packing(g, length);
  return packing.pack(g.vertices(), copies, 0);
}

inline bool contains_pattern(const Graph& g, const ForbiddenPattern& f) {
  if (f.kind() == PatternKind::Cycle) return contains_cycle(g, f.length());
  return contains_disjoint_paths(g, f.copies(), f.length());
}

inline bool is_f_free(const Graph& g, const ForbiddenPattern& f) { return !contains_pattern(g, f); }

// ---------------------------------------------------------------- local structure

inline vset common_neighbors(const Graph& g, int u, int v) { return g.neighbors(u) & g.neighbors(v); }

/// G[s] is a disjoint union of paths.
inline bool is_linear_forest(const Graph& g, vset s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if (popcount(g.neighbors(v) & s) > 2) ok = false;
  });
  if (!ok) return false;
  return g.edges_within(s) == popcount(s) - component_count(g, s);
}

inline bool neighborhood_is_paths(const Graph& g, int u) { return is_linear_forest(g, g.neighbors(u)); }

}  // namespace outerq
