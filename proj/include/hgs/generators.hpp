#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"

namespace hgs {

/// SplitMix64 (Steele, Lea & Flood). Fully specified so that random
/// ensembles can be reproduced by other implementations:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Bounded draws use rejection: with t = (2^64 - b) mod b, draw until r >= t
/// and return r mod b.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_between(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + uniform(hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

/// C(n, k), saturating at `cap` + 1 so callers can test feasibility without
/// overflow.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                                     std::uint64_t cap =
                                         std::numeric_limits<std::uint64_t>::max() - 1) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step.
    __extension__ using wide_t = unsigned __int128;
    const wide_t wide = static_cast<wide_t>(r) * (n - k + i) / i;
    if (wide > cap) return cap + 1;
    r = static_cast<std::uint64_t>(wide);
  }
  return r;
}

namespace detail {

inline void require_generator_k(std::size_t k, std::size_t min_k = 2) {
  if (k < min_k) {
    throw DomainError("k must be >= " + std::to_string(min_k) + ", got " +
                      std::to_string(k));
  }
  if (k > kMaxUniformity) {
    throw DomainError("k exceeds supported maximum " +
                      std::to_string(kMaxUniformity));
  }
}

}  // namespace detail

/// One edge on k vertices: n = k, regular of degree 1, rho = 1.
inline Hypergraph single_edge(std::size_t k) {
  detail::require_generator_k(k);
  Hypergraph::Edge e(k);
  std::iota(e.begin(), e.end(), Vertex{0});
  return Hypergraph(k, k, {std::move(e)});
}

/// All k-subsets of n vertices; regular of degree C(n-1, k-1).
inline Hypergraph complete_hypergraph(std::size_t n, std::size_t k) {
  detail::require_generator_k(k);
  if (n <= k) {
    throw DomainError("complete hypergraph requires n > k (n=" +
                      std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  constexpr std::uint64_t kMaxEdges = 1000000;
  if (binomial_capped(n, k, kMaxEdges) > kMaxEdges) {
    throw DomainError("complete hypergraph too large: C(n,k) > 10^6");
  }
  std::vector<Hypergraph::Edge> edges;
  Hypergraph::Edge comb(k);
  std::iota(comb.begin(), comb.end(), Vertex{0});
  for (;;) {
    edges.push_back(comb);
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return Hypergraph(k, n, std::move(edges));
}

/// `length` edges where consecutive edges share exactly one vertex:
/// {1..k}, {k..2k-1}, ... so n = length(k-1) + 1 and the diameter is `length`.
inline Hypergraph loose_path(std::size_t k, std::size_t length) {
  detail::require_generator_k(k, 3);
  if (length < 1) throw DomainError("loose path needs at least one edge");
  const std::size_t n = length * (k - 1) + 1;
  std::vector<Hypergraph::Edge> edges;
  for (std::size_t j = 0; j < length; ++j) {
    Hypergraph::Edge e(k);
    std::iota(e.begin(), e.end(), static_cast<Vertex>(j * (k - 1)));
    edges.push_back(std::move(e));
  }
  return Hypergraph(k, n, std::move(edges));
}

/// `t` edges through vertex 1, otherwise disjoint; rho = gamma = t^{1/k}.
inline Hypergraph hyperstar(std::size_t k, std::size_t t) {
  detail::require_generator_k(k);
  if (t < 1) throw DomainError("hyperstar needs at least one edge");
  const std::size_t n = 1 + t * (k - 1);
  std::vector<Hypergraph::Edge> edges;
  for (std::size_t j = 0; j < t; ++j) {
    Hypergraph::Edge e{0};
    for (std::size_t i = 0; i + 1 < k; ++i) {
      e.push_back(static_cast<Vertex>(1 + j * (k - 1) + i));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(k, n, std::move(edges));
}

/// Smallest edge count that can connect n vertices with k-edges.
inline std::size_t min_connected_edges(std::size_t n, std::size_t k) {
  if (n <= 1) return 0;
  return (n - 1 + k - 2) / (k - 1);
}

/// Seeded connected k-uniform hypergraph with exactly m distinct edges.
///
/// A random vertex permutation is first covered by a hypertree: the first
/// edge takes the first k vertices, each later edge joins one random covered
/// vertex with the next k-1 uncovered ones (topped up with random covered
/// vertices at the end). The remaining edges are uniform random k-subsets,
/// duplicates rejected.
inline Hypergraph random_connected(std::size_t n, std::size_t k, std::size_t m,
                                   std::uint64_t seed) {
  detail::require_generator_k(k);
  if (n < k) {
    throw DomainError("random_connected requires n >= k");
  }
  if (m < std::max<std::size_t>(1, min_connected_edges(n, k))) {
    throw DomainError("infeasible: m=" + std::to_string(m) +
                      " edges cannot connect n=" + std::to_string(n) +
                      " vertices with k=" + std::to_string(k));
  }
  if (binomial_capped(n, k, m) < m) {
    throw DomainError("infeasible: m=" + std::to_string(m) + " exceeds C(" +
                      std::to_string(n) + "," + std::to_string(k) + ")");
  }

  SplitMix64 rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform(i + 1)]);
  }

  std::set<Hypergraph::Edge> edges;
  auto insert_sorted = [&](Hypergraph::Edge e) {
    std::sort(e.begin(), e.end());
    return edges.insert(std::move(e)).second;
  };

  insert_sorted({perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k)});
  std::size_t covered = k;
  while (covered < n) {
    Hypergraph::Edge e{perm[rng.uniform(covered)]};
    const std::size_t fresh = std::min(k - 1, n - covered);
    e.insert(e.end(), perm.begin() + static_cast<std::ptrdiff_t>(covered),
             perm.begin() + static_cast<std::ptrdiff_t>(covered + fresh));
    while (e.size() < k) {
      Vertex v = perm[rng.uniform(covered)];
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    covered += fresh;
    insert_sorted(std::move(e));  // always new: contains an uncovered vertex
  }

  const std::size_t max_attempts = 200 * m + 10000;
  std::vector<Vertex> pool(n);
  for (std::size_t attempt = 0; edges.size() < m; ++attempt) {
    if (attempt == max_attempts) {
      throw Error("random_connected: exhausted retries (seed=" +
                  std::to_string(seed) + ")");
    }
    std::iota(pool.begin(), pool.end(), Vertex{0});
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + rng.uniform(n - i)]);
    }
    insert_sorted({pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k)});
  }

  return Hypergraph(k, n, {edges.begin(), edges.end()});
}

// ---------------------------------------------------------------------------

enum class Family { SingleEdge, Complete, LoosePath, Hyperstar, RandomConnected };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::SingleEdge: return "single_edge";
    case Family::Complete: return "complete";
    case Family::LoosePath: return "loose_path";
    case Family::Hyperstar: return "hyperstar";
    case Family::RandomConnected: return "random_connected";
  }
  return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
  for (Family f : {Family::SingleEdge, Family::Complete, Family::LoosePath,
                   Family::Hyperstar, Family::RandomConnected}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

/// Parameters identifying one generated instance. Only the fields relevant to
/// `family` are read.
struct GeneratorSpec {
  Family family = Family::SingleEdge;
  std::size_t k = 0;
  std::size_t n = 0;       // complete, random_connected
  std::size_t t = 0;       // hyperstar
  std::size_t length = 0;  // loose_path
  std::size_t m = 0;       // random_connected
  std::uint64_t seed = 0;  // random_connected
};

inline Hypergraph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::SingleEdge: return single_edge(spec.k);
    case Family::Complete: return complete_hypergraph(spec.n, spec.k);
    case Family::LoosePath: return loose_path(spec.k, spec.length);
    case Family::Hyperstar: return hyperstar(spec.k, spec.t);
    case Family::RandomConnected:
      return random_connected(spec.n, spec.k, spec.m, spec.seed);
  }
  throw DomainError("unknown generator family");
}

}  // namespace hgs
