#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/errors.hpp"

namespace hgs {

/// Internal vertex index, 0-based. Files, the CLI and JSON reports use
/// 1-based labels; conversion happens only at those boundaries.
using Vertex = std::uint32_t;

/// Largest edge cardinality accepted anywhere in the toolkit.
inline constexpr std::size_t kMaxUniformity = 16;

namespace detail {

// Returns a diagnostic if `edge` (0-based, any order) is not a valid
// k-subset of [0, n).
inline std::optional<std::string> check_edge(std::size_t k, std::size_t n,
                                             std::span<const Vertex> edge) {
  if (edge.size() != k) {
    return "edge has " + std::to_string(edge.size()) + " vertices, expected " +
           std::to_string(k);
  }
  for (Vertex v : edge) {
    if (v >= n) {
      return "vertex label " + std::to_string(std::uint64_t{v} + 1) +
             " out of range 1.." + std::to_string(n);
    }
  }
  std::vector<Vertex> sorted(edge.begin(), edge.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    return "repeated vertex " + std::to_string(std::uint64_t{*dup} + 1) +
           " in edge";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_uniformity(std::size_t k) {
  if (k < 2) return "edge cardinality k must be >= 2, got " + std::to_string(k);
  if (k > kMaxUniformity) {
    return "edge cardinality k=" + std::to_string(k) +
           " exceeds supported maximum " + std::to_string(kMaxUniformity);
  }
  return std::nullopt;
}

}  // namespace detail

/// Immutable k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored sorted internally and the edge list is sorted
/// lexicographically, so two hypergraphs built from the same edge sets in any
/// order compare equal and serialize identically. Degrees and a CSR
/// vertex->edge incidence index are computed once at construction.
class Hypergraph {
 public:
  using Edge = std::vector<Vertex>;

  Hypergraph(std::size_t k, std::size_t n, std::vector<Edge> edges)
      : k_(k), n_(n) {
    if (auto msg = detail::check_uniformity(k)) throw InvalidHypergraph(*msg);
    if (n == 0) throw InvalidHypergraph("vertex count n must be >= 1");
    if (n > std::numeric_limits<Vertex>::max()) {
      throw InvalidHypergraph("vertex count too large");
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (auto msg = detail::check_edge(k, n, edges[e])) {
        throw InvalidHypergraph("edge " + std::to_string(e + 1) + ": " + *msg);
      }
      std::sort(edges[e].begin(), edges[e].end());
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      throw InvalidHypergraph("duplicate edge {" + format_edge(*dup) + "}");
    }

    pins_.reserve(edges.size() * k);
    for (const auto& e : edges) pins_.insert(pins_.end(), e.begin(), e.end());

    degrees_.assign(n, 0);
    for (Vertex v : pins_) ++degrees_[v];
    incidence_offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      incidence_offsets_[v + 1] = incidence_offsets_[v] + degrees_[v];
    }
    incidence_.resize(pins_.size());
    std::vector<std::size_t> cursor(incidence_offsets_.begin(),
                                    incidence_offsets_.end() - 1);
    for (std::size_t e = 0; e < num_edges(); ++e) {
      for (Vertex v : edge(e)) incidence_[cursor[v]++] = e;
    }
  }

  std::size_t uniformity() const noexcept { return k_; }
  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return pins_.size() / k_; }

  /// Vertices of edge `e`, ascending.
  std::span<const Vertex> edge(std::size_t e) const noexcept {
    return {pins_.data() + e * k_, k_};
  }

  /// All edges back to back, `k` entries per edge.
  std::span<const Vertex> pins() const noexcept { return pins_; }

  std::size_t degree(Vertex v) const noexcept { return degrees_[v]; }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }

  /// Indices of the edges containing `v`, ascending.
  std::span<const std::size_t> incident_edges(Vertex v) const noexcept {
    return {incidence_.data() + incidence_offsets_[v],
            incidence_offsets_[v + 1] - incidence_offsets_[v]};
  }

  std::size_t max_degree() const noexcept {
    return *std::max_element(degrees_.begin(), degrees_.end());
  }
  std::size_t min_degree() const noexcept {
    return *std::min_element(degrees_.begin(), degrees_.end());
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.pins_ == b.pins_;
  }

 private:
  static std::string format_edge(const Edge& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(std::uint64_t{e[i]} + 1);
    }
    return out;
  }

  std::size_t k_;
  std::size_t n_;
  std::vector<Vertex> pins_;
  std::vector<std::size_t> degrees_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<std::size_t> incidence_;
};

// ---------------------------------------------------------------------------
// File format: '#' starts a comment, blank lines are ignored, tokens are
// whitespace separated. First content line "k n m", then m lines of k
// 1-based vertex labels.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r' || line[i] == '\f' ||
                               line[i] == '\v')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && !(line[j] == ' ' || line[j] == '\t' ||
                                line[j] == '\r' || line[j] == '\f' ||
                                line[j] == '\v')) {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace detail

/// Parses the line-oriented hypergraph format. Every rejection names the
/// offending line.
inline Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t k = 0, n = 0, m = 0;
  bool have_header = false;
  std::vector<Hypergraph::Edge> edges;
  std::map<Hypergraph::Edge, std::size_t> seen;  // sorted edge -> line

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "malformed header: expected \"k n m\"");
      }
      std::uint64_t vals[3];
      for (int i = 0; i < 3; ++i) {
        auto v = detail::parse_uint(tokens[i]);
        if (!v) {
          throw ParseError(line_no, "malformed header: \"" +
                                        std::string(tokens[i]) +
                                        "\" is not a non-negative integer");
        }
        vals[i] = *v;
      }
      k = vals[0];
      n = vals[1];
      m = vals[2];
      if (auto msg = detail::check_uniformity(k)) throw ParseError(line_no, *msg);
      if (n == 0) throw ParseError(line_no, "vertex count n must be >= 1");
      if (n > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "vertex count too large");
      }
      have_header = true;
      edges.reserve(std::min<std::size_t>(m, 1u << 20));
      continue;
    }

    if (edges.size() == m) {
      throw ParseError(line_no, "unexpected content after " +
                                    std::to_string(m) + " edges");
    }
    if (tokens.size() != k) {
      throw ParseError(line_no, "edge has " + std::to_string(tokens.size()) +
                                    " labels, expected " + std::to_string(k));
    }
    Hypergraph::Edge edge;
    edge.reserve(k);
    for (auto tok : tokens) {
      auto v = detail::parse_uint(tok);
      if (!v) {
        throw ParseError(line_no, "\"" + std::string(tok) +
                                      "\" is not a vertex label");
      }
      if (*v == 0 || *v > n) {
        throw ParseError(line_no, "vertex label " + std::to_string(*v) +
                                      " out of range 1.." + std::to_string(n));
      }
      edge.push_back(static_cast<Vertex>(*v - 1));
    }
    if (auto msg = detail::check_edge(k, n, edge)) throw ParseError(line_no, *msg);
    std::sort(edge.begin(), edge.end());
    auto [it, inserted] = seen.emplace(edge, line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate edge (same vertex set as line " +
                                    std::to_string(it->second) + ")");
    }
    edges.push_back(std::move(edge));
  }

  if (!have_header) throw ParseError(0, "empty input: missing \"k n m\" header");
  if (edges.size() != m) {
    throw ParseError(0, "truncated input: expected " + std::to_string(m) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  return Hypergraph(k, n, std::move(edges));
}

/// Canonical text form: header then edges in lexicographic order, labels
/// 1-based and ascending within each edge. parse(serialize(H)) == H.
inline std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.uniformity() << ' ' << h.num_vertices() << ' ' << h.num_edges()
      << '\n';
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(e);
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i) out << ' ';
      out << std::uint64_t{edge[i]} + 1;
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Degrees, connectivity, distances
// ---------------------------------------------------------------------------

struct DegreeStats {
  std::vector<std::size_t> degrees;
  std::size_t max = 0;  // Δ
  std::size_t min = 0;  // δ
};

inline DegreeStats degree_stats(const Hypergraph& h) {
  DegreeStats s;
  s.degrees.assign(h.degrees().begin(), h.degrees().end());
  s.max = h.max_degree();
  s.min = h.min_degree();
  return s;
}

inline bool is_regular(const Hypergraph& h) {
  return h.max_degree() == h.min_degree();
}

/// Shortest-path lengths (in edges) from one source vertex.
struct DistanceTable {
  static constexpr std::size_t kUnreachable =
      std::numeric_limits<std::size_t>::max();

  Vertex source = 0;
  std::vector<std::size_t> dist;

  bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
};

/// BFS over the "shares an edge" relation. Each edge is expanded at most once,
/// so the cost is O(k m + n).
inline DistanceTable distances_from(const Hypergraph& h, Vertex source) {
  if (source >= h.num_vertices()) {
    throw DomainError("vertex " + std::to_string(std::uint64_t{source} + 1) +
                      " out of range");
  }
  DistanceTable t;
  t.source = source;
  t.dist.assign(h.num_vertices(), DistanceTable::kUnreachable);
  std::vector<bool> edge_done(h.num_edges(), false);
  std::queue<Vertex> frontier;
  t.dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (std::size_t e : h.incident_edges(u)) {
      if (edge_done[e]) continue;
      edge_done[e] = true;
      for (Vertex v : h.edge(e)) {
        if (t.dist[v] == DistanceTable::kUnreachable) {
          t.dist[v] = t.dist[u] + 1;
          frontier.push(v);
        }
      }
    }
  }
  return t;
}

/// d(u, v), or nullopt when v is not reachable from u.
inline std::optional<std::size_t> distance(const Hypergraph& h, Vertex u,
                                           Vertex v) {
  if (v >= h.num_vertices()) {
    throw DomainError("vertex " + std::to_string(std::uint64_t{v} + 1) +
                      " out of range");
  }
  auto t = distances_from(h, u);
  if (!t.reachable(v)) return std::nullopt;
  return t.dist[v];
}

inline bool is_connected(const Hypergraph& h) {
  auto t = distances_from(h, 0);
  return std::all_of(t.dist.begin(), t.dist.end(), [](std::size_t d) {
    return d != DistanceTable::kUnreachable;
  });
}

/// Maximum distance over all vertex pairs. Throws DomainError when the
/// hypergraph is disconnected.
inline std::size_t diameter(const Hypergraph& h) {
  std::size_t best = 0;
  for (Vertex s = 0; s < h.num_vertices(); ++s) {
    auto t = distances_from(h, s);
    for (std::size_t d : t.dist) {
      if (d == DistanceTable::kUnreachable) {
        throw DomainError("diameter undefined: hypergraph is disconnected");
      }
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace hgs
