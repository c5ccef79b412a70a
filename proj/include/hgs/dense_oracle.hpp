#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"

namespace hgs {

/// Row-major dense symmetric matrix, just enough for the k = 2 oracle.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  double off_diagonal_norm2() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j) s += a_[i * n_ + j] * a_[i * n_ + j];
    return s;
  }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Sweeps until the off-diagonal Frobenius norm drops below
/// `tol` times the matrix norm (or the sweep cap is hit).
inline std::vector<double> jacobi_eigenvalues(SymmetricMatrix a,
                                              double tol = 1e-14,
                                              int max_sweeps = 100) {
  const std::size_t n = a.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += a(i, j) * a(i, j);
  const double threshold = tol * tol * std::max(total, 1e-300);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (a.off_diagonal_norm2() <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle zeroing a(p,q), computed in the stable tan form.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

/// Spectral radius of an ordinary graph through its dense adjacency matrix.
/// Independent of the tensor power iteration; used to cross-check it.
inline double oracle_rho_dense_k2(const Hypergraph& h) {
  if (h.uniformity() != 2) {
    throw DomainError("dense oracle requires k = 2, got k = " +
                      std::to_string(h.uniformity()));
  }
  if (h.num_vertices() > 64) {
    throw DomainError("dense oracle limited to n <= 64");
  }
  if (!is_connected(h)) {
    throw DomainError("dense oracle requires a connected graph");
  }
  SymmetricMatrix a(h.num_vertices());
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(e);
    a(edge[0], edge[1]) = 1.0;
    a(edge[1], edge[0]) = 1.0;
  }
  auto eig = jacobi_eigenvalues(std::move(a));
  // Perron root of a nonnegative symmetric matrix is its largest eigenvalue.
  return eig.back();
}

}  // namespace hgs
