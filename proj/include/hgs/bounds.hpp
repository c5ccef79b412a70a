#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/spectral.hpp"

namespace hgs {

/// Slack a non-strict relation may be violated by, and the margin a strict
/// relation must clear.
inline constexpr double kStrictGuard = 1e-12;
/// Relative tolerance for reporting a bound as attained.
inline constexpr double kEqualityTol = 1e-8;
/// How close rho must be to sqrt(Δδ) when the principal-ratio bound is tight.
inline constexpr double kRatioEqualityRhoTol = 1e-6;

// ---------------------------------------------------------------------------
// Closed-form bounds. Arguments are plain hypergraph parameters so that each
// formula can be checked in isolation; expressions follow the printed
// parenthesization. The irregular-only bounds return nullopt when
// nΔ - km <= 0 (regular input), where they do not apply.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_degrees(double max_degree, double min_degree) {
  if (!(min_degree >= 1.0)) {
    throw DomainError("minimum degree must be >= 1 (isolated vertex)");
  }
  if (max_degree < min_degree) {
    throw DomainError("maximum degree smaller than minimum degree");
  }
}

inline void require_k(std::size_t k) {
  if (k < 2) throw DomainError("k must be >= 2");
}

// nΔ - km, the total degree deficit. Positive exactly for irregular inputs.
inline double degree_deficit(double n, double m, double k, double max_degree) {
  return n * max_degree - k * m;
}

}  // namespace detail

/// γ >= (Δ/δ)^{1/(2(k-1))}.
inline double ratio_lower_bound(double max_degree, double min_degree,
                                std::size_t k) {
  detail::require_degrees(max_degree, min_degree);
  detail::require_k(k);
  const double kd = static_cast<double>(k);
  return std::pow(max_degree / min_degree, 1.0 / (2.0 * (kd - 1.0)));
}

/// x_max >= [(δ/Δ)^{k/(2(k-1))} + n - 1]^{-1/k}.
inline double xmax_lower_bound(double max_degree, double min_degree,
                               std::size_t k, double n) {
  detail::require_degrees(max_degree, min_degree);
  detail::require_k(k);
  const double kd = static_cast<double>(k);
  return std::pow(
      std::pow(min_degree / max_degree, kd / (2.0 * (kd - 1.0))) + n - 1.0,
      -(1.0 / kd));
}

/// x_min <= [(Δ/δ)^{k/(2(k-1))} + n - 1]^{-1/k}.
inline double xmin_upper_bound(double max_degree, double min_degree,
                               std::size_t k, double n) {
  detail::require_degrees(max_degree, min_degree);
  detail::require_k(k);
  const double kd = static_cast<double>(k);
  return std::pow(
      std::pow(max_degree / min_degree, kd / (2.0 * (kd - 1.0))) + n - 1.0,
      -(1.0 / kd));
}

/// x_max >= (ρ/(km))^{1/k}, tight exactly for regular hypergraphs.
inline double xmax_rho_bound(double rho, std::size_t k, double m) {
  if (!(rho > 0.0)) throw DomainError("spectral radius must be positive");
  detail::require_k(k);
  const double kd = static_cast<double>(k);
  return std::pow(rho / (kd * m), 1.0 / kd);
}

struct RhoSandwich {
  double lower;  // Δ / γ^{k-1}
  double upper;  // γ^{k-1} δ
};

inline RhoSandwich rho_gamma_sandwich(double max_degree, double min_degree,
                                      double gamma, std::size_t k) {
  if (!(gamma >= 1.0)) throw DomainError("principal ratio must be >= 1");
  detail::require_k(k);
  const double g = std::pow(gamma, static_cast<double>(k) - 1.0);
  return {max_degree / g, g * min_degree};
}

/// ρ < kmΔ / (km + (nΔ-km)γ^{-k} + (k/(2(k-1)D)) [1 - γ^{-k/2}]^2).
inline std::optional<double> rho_upper_thm34(double n, double m, std::size_t k,
                              double max_degree, double diam, double gamma) {
  detail::require_k(k);
  const double kd = static_cast<double>(k);
  const double km = kd * m;
  if (!(detail::degree_deficit(n, m, kd, max_degree) > 0.0)) return std::nullopt;
  const double gk = std::pow(gamma, -kd);
  const double gh = 1.0 - std::pow(gamma, -kd / 2.0);
  return km * max_degree /
         (km + (n * max_degree - km) * gk +
          (kd / (2.0 * (kd - 1.0) * diam)) * (gh * gh));
}

/// ρ < Δ - [2(k-1)D(nΔ-km)γ^{-k} + k(1-γ^{-k/2})^2] / [2(γ^{-k}+n-1)(k-1)D].
inline std::optional<double> rho_upper_thm35(double n, double m, std::size_t k,
                              double max_degree, double diam, double gamma) {
  detail::require_k(k);
  const double kd = static_cast<double>(k);
  const double gk = std::pow(gamma, -kd);
  const double gh = 1.0 - std::pow(gamma, -kd / 2.0);
  const double deficit = detail::degree_deficit(n, m, kd, max_degree);
  if (!(deficit > 0.0)) return std::nullopt;
  return max_degree -
         (2.0 * (kd - 1.0) * diam * deficit * gk + kd * (gh * gh)) /
             (2.0 * (gk + n - 1.0) * (kd - 1.0) * diam);
}

/// Eigenvector-free: ρ < Δ - k(nΔ-km) / ([2(k-1)D(nΔ-km)+k][(δ/Δ)^{k/(2(k-1))}+n-1]).
inline std::optional<double> rho_upper_thm36(double n, double m, std::size_t k,
                              double max_degree, double min_degree,
                              double diam) {
  detail::require_k(k);
  const double kd = static_cast<double>(k);
  const double deficit = detail::degree_deficit(n, m, kd, max_degree);
  if (!(deficit > 0.0)) return std::nullopt;
  return max_degree -
         kd * deficit /
             ((2.0 * (kd - 1.0) * diam * deficit + kd) *
              (std::pow(min_degree / max_degree, kd / (2.0 * (kd - 1.0))) + n -
               1.0));
}

/// ρ < [2mΔ(k-1)D(nΔ-km) + kmΔ] / [2m(k-1)D(nΔ-km) + nΔ].
inline std::optional<double> rho_upper_thm37(double n, double m, std::size_t k,
                              double max_degree, double diam) {
  detail::require_k(k);
  const double kd = static_cast<double>(k);
  const double deficit = detail::degree_deficit(n, m, kd, max_degree);
  if (!(deficit > 0.0)) return std::nullopt;
  return (2.0 * m * max_degree * (kd - 1.0) * diam * deficit +
          kd * m * max_degree) /
         (2.0 * m * (kd - 1.0) * diam * deficit + n * max_degree);
}

/// Graphs: Δ - ρ > (nΔ-2m) / ([D(nΔ-2m)+1][δ/Δ + n - 1]).
inline std::optional<double> graph_gap_cor38(double n, double m, double max_degree,
                              double min_degree, double diam) {
  const double deficit = n * max_degree - 2.0 * m;
  if (!(deficit > 0.0)) return std::nullopt;
  return deficit /
         ((diam * deficit + 1.0) * (min_degree / max_degree + n - 1.0));
}

/// Graphs: Δ - ρ > Δ - [2mΔD(nΔ-2m)+2mΔ] / [2mD(nΔ-2m)+nΔ].
inline std::optional<double> graph_gap_cor39(double n, double m, double max_degree,
                              double diam) {
  const double deficit = n * max_degree - 2.0 * m;
  if (!(deficit > 0.0)) return std::nullopt;
  return max_degree -
         (2.0 * m * max_degree * diam * deficit + 2.0 * m * max_degree) /
             (2.0 * m * diam * deficit + n * max_degree);
}

/// Earlier graph bound the two corollaries are compared against:
/// Δ - ρ > (nΔ-2m) / (n(D(nΔ-2m)+1)).
inline std::optional<double> cioaba_gap(double n, double m, double max_degree, double diam) {
  const double deficit = n * max_degree - 2.0 * m;
  if (!(deficit > 0.0)) return std::nullopt;
  return deficit / (n * (diam * deficit + 1.0));
}

// ---------------------------------------------------------------------------
// Auxiliary inequalities, exposed as (lhs, rhs) pairs with lhs >= rhs.
// ---------------------------------------------------------------------------

struct InequalitySides {
  double lhs;
  double rhs;
};

/// Arithmetic mean minus geometric mean against
/// (1/(n(n-1))) sum_{i<j} (sqrt(y_i) - sqrt(y_j))^2.
inline InequalitySides lemma_amgm_refinement(std::span<const double> y) {
  const std::size_t n = y.size();
  if (n < 2) throw DomainError("AM-GM refinement needs at least two values");
  double sum = 0.0;
  double log_sum = 0.0;
  bool any_zero = false;
  for (double v : y) {
    if (!(v >= 0.0)) throw DomainError("AM-GM refinement needs y_i >= 0");
    sum += v;
    if (v == 0.0) any_zero = true;
    else log_sum += std::log(v);
  }
  const double nd = static_cast<double>(n);
  const double geo = any_zero ? 0.0 : std::exp(log_sum / nd);
  double pairs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::sqrt(y[i]) - std::sqrt(y[j]);
      pairs += d * d;
    }
  }
  return {sum / nd - geo, pairs / (nd * (nd - 1.0))};
}

/// a(y1-y2)^2 + b y2^2 against (ab/(a+b)) y1^2; equal iff y2 = a y1/(a+b).
inline InequalitySides lemma_quadratic(double a, double b, double y1,
                                       double y2) {
  if (!(a > 0.0 && b > 0.0 && y1 > 0.0 && y2 > 0.0)) {
    throw DomainError("quadratic lemma requires positive arguments");
  }
  const double d = y1 - y2;
  return {a * d * d + b * y2 * y2, (a * b / (a + b)) * y1 * y1};
}

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

/// Relation between the computed target and the bound: `target REL value`.
enum class Relation { GreaterEqual, LessEqual, Greater, Less };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::GreaterEqual: return ">=";
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::Less: return "<";
  }
  return "?";
}

inline bool is_strict(Relation r) {
  return r == Relation::Greater || r == Relation::Less;
}

struct BoundReport {
  std::string bound_id;
  std::string target_name;
  double target = 0.0;
  Relation relation = Relation::GreaterEqual;
  bool applicable = true;
  // Absent when the bound is inapplicable.
  std::optional<double> value;
  std::optional<bool> satisfied;
  std::optional<double> slack;  // positive = satisfied
  bool equality = false;
  // Extra claim tied to equality (ρ = sqrt(Δδ) for thm2.1, equality <=>
  // regular for thm2.3). Folded into `satisfied`.
  std::optional<bool> equality_check;
};

/// Evaluated relation, shared by every report entry.
inline BoundReport make_report(std::string id, std::string target_name,
                               double target, Relation rel, double value) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.target_name = std::move(target_name);
  r.target = target;
  r.relation = rel;
  r.value = value;
  const bool ge = rel == Relation::GreaterEqual || rel == Relation::Greater;
  const double slack = ge ? target - value : value - target;
  r.slack = slack;
  r.equality = std::abs(value - target) <=
               kEqualityTol * std::max(1.0, std::abs(target));
  if (is_strict(rel)) {
    r.satisfied = slack > kStrictGuard;
  } else {
    r.satisfied = slack >= -kStrictGuard || r.equality;
  }
  return r;
}

inline BoundReport make_inapplicable(std::string id, std::string target_name,
                                     double target, Relation rel) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.target_name = std::move(target_name);
  r.target = target;
  r.relation = rel;
  r.applicable = false;
  return r;
}

/// Hypergraph parameters every bound draws on.
struct BoundInputs {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t diameter = 0;
  bool regular = false;
  double rho = 0.0;
  double gamma = 1.0;
  double x_max = 0.0;
  double x_min = 0.0;
};

inline BoundInputs bound_inputs(const Hypergraph& h, const SpectralResult& s) {
  BoundInputs in;
  in.k = h.uniformity();
  in.n = h.num_vertices();
  in.m = h.num_edges();
  in.max_degree = h.max_degree();
  in.min_degree = h.min_degree();
  in.diameter = diameter(h);
  in.regular = is_regular(h);
  in.rho = s.rho;
  in.gamma = s.gamma;
  in.x_max = s.x_max();
  in.x_min = s.x_min();
  return in;
}

/// Evaluates every bound against the computed spectral data. Always returns
/// the same 15 entries in the same order; inapplicable ones are marked, not
/// dropped.
inline std::vector<BoundReport> full_report(const BoundInputs& in) {
  const double n = static_cast<double>(in.n);
  const double m = static_cast<double>(in.m);
  const double dmax = static_cast<double>(in.max_degree);
  const double dmin = static_cast<double>(in.min_degree);
  const double diam = static_cast<double>(in.diameter);
  const std::size_t k = in.k;

  std::vector<BoundReport> out;
  out.reserve(15);

  {
    auto r = make_report("thm2.1", "gamma", in.gamma, Relation::GreaterEqual,
                         ratio_lower_bound(dmax, dmin, k));
    if (r.equality) {
      r.equality_check =
          std::abs(in.rho - std::sqrt(dmax * dmin)) <= kRatioEqualityRhoTol;
      r.satisfied = *r.satisfied && *r.equality_check;
    }
    out.push_back(std::move(r));
  }
  out.push_back(make_report("thm2.2.1", "x_max", in.x_max,
                            Relation::GreaterEqual,
                            xmax_lower_bound(dmax, dmin, k, n)));
  out.push_back(make_report("thm2.2.2", "x_min", in.x_min, Relation::LessEqual,
                            xmin_upper_bound(dmax, dmin, k, n)));
  {
    auto r = make_report("thm2.3", "x_max", in.x_max, Relation::GreaterEqual,
                         xmax_rho_bound(in.rho, k, m));
    r.equality_check = r.equality == in.regular;
    r.satisfied = *r.satisfied && *r.equality_check;
    out.push_back(std::move(r));
  }
  {
    auto sandwich = rho_gamma_sandwich(dmax, dmin, in.gamma, k);
    out.push_back(make_report("thm3.3.lower", "rho", in.rho,
                              Relation::GreaterEqual, sandwich.lower));
    out.push_back(make_report("thm3.3.upper", "rho", in.rho,
                              Relation::LessEqual, sandwich.upper));
  }

  auto strict_rho = [&](const char* id, std::optional<double> value) {
    if (!value) {
      out.push_back(make_inapplicable(id, "rho", in.rho, Relation::Less));
    } else {
      out.push_back(make_report(id, "rho", in.rho, Relation::Less, *value));
    }
  };
  strict_rho("thm3.4", rho_upper_thm34(n, m, k, dmax, diam, in.gamma));
  strict_rho("thm3.5", rho_upper_thm35(n, m, k, dmax, diam, in.gamma));
  strict_rho("thm3.6", rho_upper_thm36(n, m, k, dmax, dmin, diam));
  strict_rho("thm3.7", rho_upper_thm37(n, m, k, dmax, diam));

  const double gap = dmax - in.rho;
  std::optional<double> g38, g39, g36;
  if (k == 2) {
    g38 = graph_gap_cor38(n, m, dmax, dmin, diam);
    g39 = graph_gap_cor39(n, m, dmax, diam);
    g36 = cioaba_gap(n, m, dmax, diam);
  }
  auto gap_report = [&](const char* id, const std::optional<double>& value) {
    if (!value) {
      out.push_back(
          make_inapplicable(id, "Delta-rho", gap, Relation::Greater));
    } else {
      out.push_back(make_report(id, "Delta-rho", gap, Relation::Greater,
                                *value));
    }
  };
  gap_report("cor3.8", g38);
  gap_report("cor3.9", g39);
  gap_report("bound3.6", g36);

  auto improves = [&](const char* id, const char* target,
                      const std::optional<double>& corollary) {
    if (!corollary || !g36) {
      out.push_back(make_inapplicable(id, target, 0.0, Relation::Greater));
    } else {
      out.push_back(
          make_report(id, target, *corollary, Relation::Greater, *g36));
    }
  };
  improves("cor3.8.improves", "cor3.8_gap", g38);
  improves("cor3.9.improves", "cor3.9_gap", g39);
  return out;
}

inline std::vector<BoundReport> full_report(const Hypergraph& h,
                                            const SpectralResult& s) {
  return full_report(bound_inputs(h, s));
}

inline bool all_satisfied(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports) {
    if (r.applicable && !*r.satisfied) return false;
  }
  return true;
}

}  // namespace hgs
