#pragma once

// Q-index q(G) = lambda_max(D(G) + A(G)) by power iteration, the eta(u)
// upper-bound quantity, Rayleigh-quotient deltas for edge rewrites, and
// separation-certified comparison of Q-indices.

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "outerq/graph.hpp"

namespace outerq {

struct SpectralResult {
  double q = 0.0;
  std::vector<double> x;  // unit 2-norm, positive on the extremal component
  double residual = 0.0;  // ||Q x - q x||_2
  int iterations = 0;
  bool connected = true;  // false: x is supported on one extremal component
};

struct SpectralOptions {
  double tolerance = 1e-12;
  int max_iterations = 2'000'000;
};

/// Raised when power iteration hits its cap; carries the best estimate.
class convergence_error : public error {
 public:
  convergence_error(const std::string& what, SpectralResult best)
      : error(errc::convergence, what), best_(std::move(best)) {}
  const SpectralResult& best() const noexcept { return best_; }

 private:
  SpectralResult best_;
};

namespace detail {

inline void apply_q(const Graph& g, std::span<const double> x, std::span<double> y) {
  for (int v = 0; v < g.order(); ++v) {
    double s = g.degree(v) * x[v];
    for_each_vertex(g.neighbors(v), [&](int w) { s += x[w]; });
    y[v] = s;
  }
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline SpectralResult power_iteration(const Graph& g, const SpectralOptions& opt) {
  const int n = g.order();
  SpectralResult out;
  if (n == 1) {
    out.x = {1.0};
    return out;
  }
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  for (int it = 1; it <= opt.max_iterations; ++it) {
    apply_q(g, x, y);
    const double lambda = dot(x, y);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = y[i] - lambda * x[i];
      r2 += d * d;
    }
    out.q = lambda;
    out.residual = std::sqrt(r2);
    out.iterations = it;
    if (out.residual <= opt.tolerance) {
      out.x = x;
      return out;
    }
    const double norm = std::sqrt(dot(y, y));
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  out.x = x;
  throw convergence_error("power iteration did not reach residual " + std::to_string(opt.tolerance) + " after " +
                              std::to_string(opt.max_iterations) + " iterations",
                          out);
}

}  // namespace detail

/// Q-index and Perron vector. Power iteration from the all-ones vector; for
/// a disconnected graph the largest component value is returned with x
/// supported on that component and `connected` cleared.
inline SpectralResult q_index(const Graph& g, const SpectralOptions& opt = {}) {
  if (!(opt.tolerance > 0.0)) throw error(errc::domain, "tolerance must be positive");
  std::vector<vset> comps = components(g);
  if (comps.size() == 1) return detail::power_iteration(g, opt);
  SpectralResult best;
  vset best_comp = 0;
  bool have = false;
  for (vset c : comps) {
    SpectralResult r = detail::power_iteration(induced(g, c), opt);
    if (!have || r.q > best.q) {
      best = std::move(r);
      best_comp = c;
      have = true;
    }
  }
  std::vector<double> x(g.order(), 0.0);
  int k = 0;
  for_each_vertex(best_comp, [&](int v) { x[v] = best.x[k++]; });
  best.x = std::move(x);
  best.connected = false;
  return best;
}

inline SpectralResult q_index(const Graph& g, double tolerance) {
  SpectralOptions opt;
  opt.tolerance = tolerance;
  return q_index(g, opt);
}

/// ||Q(g) x - q x||_2 recomputed from scratch.
inline double residual_norm(const Graph& g, std::span<const double> x, double q) {
  std::vector<double> y(g.order());
  detail::apply_q(g, x, y);
  double r2 = 0.0;
  for (int i = 0; i < g.order(); ++i) r2 += (y[i] - q * x[i]) * (y[i] - q * x[i]);
  return std::sqrt(r2);
}

// ---------------------------------------------------------------- eta

/// Exact value of eta(u) = d(u) + (sum of neighbour degrees) / d(u), kept as
/// numerator / denominator.
struct EtaValue {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }

  friend bool operator<(const EtaValue& a, const EtaValue& b) {
    return a.numerator * b.denominator < b.numerator * a.denominator;
  }
};

inline EtaValue eta_exact(const Graph& g, int u) {
  const int d = g.degree(u);
  if (d == 0) throw error(errc::undefined_eta, "eta is undefined at isolated vertex " + std::to_string(u));
  std::int64_t sum = 0;
  for_each_vertex(g.neighbors(u), [&](int v) { sum += g.degree(v); });
  return {static_cast<std::int64_t>(d) * d + sum, d};
}

inline double eta(const Graph& g, int u) { return eta_exact(g, u).value(); }

inline EtaValue eta_max_exact(const Graph& g) {
  EtaValue best = eta_exact(g, 0);
  for (int u = 1; u < g.order(); ++u) {
    EtaValue e = eta_exact(g, u);
    if (best < e) best = e;
  }
  return best;
}

inline double eta_max(const Graph& g) { return eta_max_exact(g).value(); }

// ---------------------------------------------------------------- Rayleigh deltas

/// x^T (Q(G') - Q(G)) x when G' is G with `removed` deleted and `added`
/// inserted: sum over added (x_a + x_b)^2 minus sum over removed.
inline double rayleigh_delta(std::span<const double> x, std::span<const Edge> removed, std::span<const Edge> added) {
  double s = 0.0;
  for (Edge e : added) s += (x[e.a] + x[e.b]) * (x[e.a] + x[e.b]);
  for (Edge e : removed) s -= (x[e.a] + x[e.b]) * (x[e.a] + x[e.b]);
  return s;
}

// ---------------------------------------------------------------- comparison

enum class Ordering { Less, Greater, Indistinguishable };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Greater: return "Greater";
    case Ordering::Indistinguishable: return "Indistinguishable";
  }
  return "?";
}

struct QComparison {
  Ordering order = Ordering::Indistinguishable;
  double q1 = 0.0;
  double q2 = 0.0;
  bool escalated = false;
};

/// Orders q(g1) against q(g2). Both are solved to residual sep/10; if they
/// are within `sep` they are re-solved to sep/1000, and a gap still within
/// `sep` is reported as Indistinguishable.
inline QComparison q_compare(const Graph& g1, const Graph& g2, double sep = 1e-9) {
  if (sep < 0.0) throw error(errc::domain, "separation must be non-negative");
  const double base = sep > 0.0 ? sep : 1e-12;
  QComparison out;
  out.q1 = q_index(g1, base / 10).q;
  out.q2 = q_index(g2, base / 10).q;
  if (std::abs(out.q1 - out.q2) <= sep) {
    out.escalated = true;
    const double fine = std::max(base / 1000, 1e-13);
    out.q1 = q_index(g1, fine).q;
    out.q2 = q_index(g2, fine).q;
  }
  const double diff = out.q1 - out.q2;
  if (std::abs(diff) <= sep) {
    out.order = Ordering::Indistinguishable;
  } else {
    out.order = diff > 0 ? Ordering::Greater : Ordering::Less;
  }
  return out;
}

}  // namespace outerq
