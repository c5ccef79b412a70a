#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"

namespace hgs {

/// Collatz–Wielandt estimates min_i / max_i of (A x^{k-1})_i / x_i^{k-1} for a
/// strictly positive x. Always brackets the spectral radius of a connected
/// hypergraph.
struct CWBracket {
  double lower = 0.0;
  double upper = 0.0;

  double width() const noexcept { return upper - lower; }
  bool contains(double value) const noexcept {
    return lower <= value && value <= upper;
  }
};

struct SpectralOptions {
  double tol = 1e-10;             // target CW bracket width
  std::size_t max_iter = 100000;  // power-iteration updates
  /// Optional per-iteration hook, called with the iteration index and the
  /// bracket of the iterate about to be tested.
  std::function<void(std::size_t, const CWBracket&)> on_iteration;
};

/// Principal eigenpair of the adjacency tensor, certified by its CW bracket.
struct SpectralResult {
  double rho = 0.0;
  double rho_lower = 0.0;
  double rho_upper = 0.0;
  std::vector<double> x;  // positive, sum x_i^k = 1
  double gamma = 1.0;     // x_max / x_min
  std::size_t iterations = 0;
  double residual = 0.0;  // max_i |(A x^{k-1})_i - rho x_i^{k-1}|

  double x_max() const { return *std::max_element(x.begin(), x.end()); }
  double x_min() const { return *std::min_element(x.begin(), x.end()); }
};

namespace detail {

inline void require_length(const Hypergraph& h, std::span<const double> x) {
  if (x.size() != h.num_vertices()) {
    throw DomainError("vector length " + std::to_string(x.size()) +
                      " does not match vertex count " +
                      std::to_string(h.num_vertices()));
  }
}

inline void require_positive(std::span<const double> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) {
      throw DomainError("vector entry " + std::to_string(i + 1) +
                        " is not strictly positive");
    }
  }
}

inline double ipow(double base, std::size_t exp) {
  double r = 1.0;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

inline void require_spectral_domain(const Hypergraph& h) {
  if (h.num_edges() == 0) {
    throw DomainError("spectral analysis requires at least one edge");
  }
  if (!is_connected(h)) {
    throw DomainError("spectral analysis requires connected hypergraph");
  }
}

}  // namespace detail

/// (A x^{k-1})_i = sum over edges e containing i of prod_{j in e, j != i} x_j.
///
/// The 1/(k-1)! tensor entries cancel against the (k-1)! orderings of e \ {i},
/// so the tensor is never formed. Prefix/suffix products keep the cost at
/// O(k m) and stay exact when some x_j are zero.
inline std::vector<double> apply_adjacency(const Hypergraph& h,
                                           std::span<const double> x) {
  detail::require_length(h, x);
  const std::size_t k = h.uniformity();
  std::vector<double> y(h.num_vertices(), 0.0);
  std::vector<double> prefix(k + 1), suffix(k + 1);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(e);
    prefix[0] = 1.0;
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * x[edge[i]];
    suffix[k] = 1.0;
    for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * x[edge[i]];
    for (std::size_t i = 0; i < k; ++i) y[edge[i]] += prefix[i] * suffix[i + 1];
  }
  return y;
}

inline CWBracket collatz_wielandt(const Hypergraph& h,
                                  std::span<const double> x) {
  detail::require_length(h, x);
  detail::require_positive(x);
  auto y = apply_adjacency(h, x);
  const std::size_t km1 = h.uniformity() - 1;
  CWBracket b{std::numeric_limits<double>::infinity(),
              -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = y[i] / detail::ipow(x[i], km1);
    b.lower = std::min(b.lower, r);
    b.upper = std::max(b.upper, r);
  }
  return b;
}

inline double principal_ratio(std::span<const double> x) {
  if (x.empty()) throw DomainError("principal ratio of an empty vector");
  detail::require_positive(x);
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi / *lo;
}

/// k * sum_e prod_{j in e} x_j. Equals rho for the normalized principal
/// eigenvector; for any other normalized x it is just the functional value.
inline double rayleigh_identity(const Hypergraph& h,
                                std::span<const double> x) {
  detail::require_length(h, x);
  const std::size_t k = h.uniformity();
  double norm = 0.0;
  for (double v : x) norm += detail::ipow(std::abs(v), k);
  if (std::abs(norm - 1.0) > 1e-9) {
    throw DomainError("rayleigh_identity requires sum x_i^k = 1 (got " +
                      std::to_string(norm) + ")");
  }
  double sum = 0.0;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    double p = 1.0;
    for (Vertex v : h.edge(e)) p *= x[v];
    sum += p;
  }
  return static_cast<double>(k) * sum;
}

/// Shifted power iteration x <- ((A + I) x^{k-1})^{[1/(k-1)]}, renormalized to
/// sum x_i^k = 1 every step. Starts from the uniform vector n^{-1/k} and stops
/// once the CW bracket of the unshifted ratios is no wider than `tol`.
///
/// Throws DomainError for disconnected input or k > kMaxUniformity, and
/// ConvergenceError (carrying the last bracket) after max_iter updates.
inline SpectralResult principal_eigenpair(const Hypergraph& h,
                                          const SpectralOptions& opts = {}) {
  if (!(opts.tol > 0.0)) throw DomainError("tolerance must be positive");
  detail::require_spectral_domain(h);

  constexpr double kShift = 1.0;
  const std::size_t n = h.num_vertices();
  const std::size_t k = h.uniformity();
  const std::size_t km1 = k - 1;
  const double kd = static_cast<double>(k);
  const double inv_km1 = 1.0 / static_cast<double>(km1);

  std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / kd));
  std::vector<double> xp(n);  // x_i^{k-1}
  CWBracket bracket;

  for (std::size_t iter = 0;; ++iter) {
    auto y = apply_adjacency(h, x);
    bracket = {std::numeric_limits<double>::infinity(),
               -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < n; ++i) {
      xp[i] = detail::ipow(x[i], km1);
      double r = y[i] / xp[i];
      bracket.lower = std::min(bracket.lower, r);
      bracket.upper = std::max(bracket.upper, r);
    }
    if (opts.on_iteration) opts.on_iteration(iter, bracket);

    if (bracket.width() <= opts.tol) {
      SpectralResult res;
      // sum_i x_i y_i = k sum_e x^e: the x_i^k-weighted mean of the ratios.
      double rq = 0.0;
      for (std::size_t i = 0; i < n; ++i) rq += x[i] * y[i];
      res.rho = std::clamp(rq, bracket.lower, bracket.upper);
      res.rho_lower = bracket.lower;
      res.rho_upper = bracket.upper;
      res.iterations = iter;
      double resid = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        resid = std::max(resid, std::abs(y[i] - res.rho * xp[i]));
      }
      res.residual = resid;
      res.gamma = principal_ratio(x);
      res.x = std::move(x);
      return res;
    }
    if (iter == opts.max_iter) {
      throw ConvergenceError(
          "power iteration did not converge in " +
              std::to_string(opts.max_iter) + " iterations; bracket [" +
              std::to_string(bracket.lower) + ", " +
              std::to_string(bracket.upper) + "]",
          bracket.lower, bracket.upper, iter);
    }

    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = std::pow(y[i] + kShift * xp[i], inv_km1);
      norm += detail::ipow(x[i], k);
    }
    const double scale = std::pow(norm, -1.0 / kd);
    for (double& v : x) v *= scale;
  }
}

}  // namespace hgs
