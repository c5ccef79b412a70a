#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "hgs/bounds.hpp"
#include "hgs/errors.hpp"
#include "hgs/generators.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/spectral.hpp"

namespace hgs {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr const char* kAnalysisSchema = "hgs-analysis/1";

/// Everything `analyze` knows about one hypergraph.
struct AnalysisReport {
  std::string input;  // file path or generator description
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  BoundInputs params;
  double rho_lower = 0.0;
  double rho_upper = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
  std::vector<double> eigenvector;  // empty unless requested
  std::vector<BoundReport> bounds;

  std::size_t count_applicable() const {
    return static_cast<std::size_t>(std::count_if(
        bounds.begin(), bounds.end(), [](const auto& b) { return b.applicable; }));
  }
  std::size_t count_violated() const {
    return static_cast<std::size_t>(
        std::count_if(bounds.begin(), bounds.end(), [](const auto& b) {
          return b.applicable && !*b.satisfied;
        }));
  }
};

inline AnalysisReport analyze(const Hypergraph& h, std::string input,
                              const SpectralOptions& opts,
                              bool keep_eigenvector) {
  auto s = principal_eigenpair(h, opts);
  AnalysisReport r;
  r.input = std::move(input);
  r.tol = opts.tol;
  r.max_iter = opts.max_iter;
  r.params = bound_inputs(h, s);
  r.rho_lower = s.rho_lower;
  r.rho_upper = s.rho_upper;
  r.iterations = s.iterations;
  r.residual = s.residual;
  r.bounds = full_report(r.params);
  if (keep_eigenvector) r.eigenvector = std::move(s.x);
  return r;
}

// ---------------------------------------------------------------------------
// JSON (schema documented in docs/report-schema.md)
// ---------------------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline std::optional<Relation> relation_from_string(std::string_view s) {
  for (Relation r : {Relation::GreaterEqual, Relation::LessEqual,
                     Relation::Greater, Relation::Less}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

inline Json to_json(const BoundReport& b) {
  Json j;
  j["bound_id"] = b.bound_id;
  j["target_name"] = b.target_name;
  j["target"] = b.target;
  j["relation"] = std::string(to_string(b.relation));
  j["applicable"] = b.applicable;
  if (b.applicable) {
    j["value"] = *b.value;
    j["satisfied"] = *b.satisfied;
    j["slack"] = *b.slack;
    j["equality"] = b.equality;
    if (b.equality_check) j["equality_check"] = *b.equality_check;
  }
  return j;
}

inline BoundReport bound_report_from_json(const Json& j) {
  BoundReport b;
  b.bound_id = j.at("bound_id").get<std::string>();
  b.target_name = j.at("target_name").get<std::string>();
  b.target = j.at("target").get<double>();
  auto rel = relation_from_string(j.at("relation").get<std::string>());
  if (!rel) throw Error("unknown relation in bound report");
  b.relation = *rel;
  b.applicable = j.at("applicable").get<bool>();
  if (b.applicable) {
    b.value = j.at("value").get<double>();
    b.satisfied = j.at("satisfied").get<bool>();
    b.slack = j.at("slack").get<double>();
    b.equality = j.at("equality").get<bool>();
    if (j.contains("equality_check")) {
      b.equality_check = j.at("equality_check").get<bool>();
    }
  }
  return b;
}

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = kAnalysisSchema;
  j["toolkit_version"] = kToolkitVersion;
  j["input"] = r.input;
  j["tolerances"] = {{"tol", r.tol},
                     {"max_iter", r.max_iter},
                     {"strict_guard", kStrictGuard},
                     {"equality_tol", kEqualityTol}};
  const auto& p = r.params;
  j["hypergraph"] = {{"k", p.k},
                     {"n", p.n},
                     {"m", p.m},
                     {"max_degree", p.max_degree},
                     {"min_degree", p.min_degree},
                     {"diameter", p.diameter},
                     {"regular", p.regular}};
  Json spectral = {{"rho", p.rho},
                   {"rho_lower", r.rho_lower},
                   {"rho_upper", r.rho_upper},
                   {"gamma", p.gamma},
                   {"x_max", p.x_max},
                   {"x_min", p.x_min},
                   {"iterations", r.iterations},
                   {"residual", r.residual}};
  if (!r.eigenvector.empty()) spectral["eigenvector"] = r.eigenvector;
  j["spectral"] = std::move(spectral);
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  j["bounds"] = std::move(bounds);
  j["summary"] = {{"reports", r.bounds.size()},
                  {"applicable", r.count_applicable()},
                  {"violated", r.count_violated()}};
  return j;
}

inline AnalysisReport analysis_report_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != kAnalysisSchema) {
    throw Error("unsupported analysis schema");
  }
  AnalysisReport r;
  r.input = j.at("input").get<std::string>();
  r.tol = j.at("tolerances").at("tol").get<double>();
  r.max_iter = j.at("tolerances").at("max_iter").get<std::size_t>();
  const auto& h = j.at("hypergraph");
  auto& p = r.params;
  p.k = h.at("k").get<std::size_t>();
  p.n = h.at("n").get<std::size_t>();
  p.m = h.at("m").get<std::size_t>();
  p.max_degree = h.at("max_degree").get<std::size_t>();
  p.min_degree = h.at("min_degree").get<std::size_t>();
  p.diameter = h.at("diameter").get<std::size_t>();
  p.regular = h.at("regular").get<bool>();
  const auto& s = j.at("spectral");
  p.rho = s.at("rho").get<double>();
  p.gamma = s.at("gamma").get<double>();
  p.x_max = s.at("x_max").get<double>();
  p.x_min = s.at("x_min").get<double>();
  r.rho_lower = s.at("rho_lower").get<double>();
  r.rho_upper = s.at("rho_upper").get<double>();
  r.iterations = s.at("iterations").get<std::size_t>();
  r.residual = s.at("residual").get<double>();
  if (s.contains("eigenvector")) {
    r.eigenvector = s.at("eigenvector").get<std::vector<double>>();
  }
  for (const auto& b : j.at("bounds")) r.bounds.push_back(bound_report_from_json(b));
  return r;
}

// ---------------------------------------------------------------------------
// Human-readable output
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fmt_double(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace detail

inline std::string format_table(const AnalysisReport& r) {
  using detail::fmt_double;
  using detail::pad;
  const auto& p = r.params;
  std::ostringstream out;
  out << "input       " << r.input << '\n';
  out << "hypergraph  k=" << p.k << " n=" << p.n << " m=" << p.m
      << "  max_degree=" << p.max_degree << " min_degree=" << p.min_degree
      << " diameter=" << p.diameter << "  "
      << (p.regular ? "regular" : "irregular") << '\n';
  out << "spectral    rho=" << fmt_double(p.rho, "%.15g") << "  bracket=["
      << fmt_double(r.rho_lower, "%.15g") << ", "
      << fmt_double(r.rho_upper, "%.15g") << "]\n";
  out << "            gamma=" << fmt_double(p.gamma, "%.15g")
      << "  x_max=" << fmt_double(p.x_max) << "  x_min=" << fmt_double(p.x_min)
      << "\n            iterations=" << r.iterations
      << "  residual=" << fmt_double(r.residual, "%.3e")
      << "  tol=" << fmt_double(r.tol, "%.3g") << '\n';
  if (!r.eigenvector.empty()) {
    out << "eigenvector";
    for (std::size_t i = 0; i < r.eigenvector.size(); ++i) {
      out << (i % 4 == 0 ? "\n  " : "  ") << pad(std::to_string(i + 1), 4)
          << fmt_double(r.eigenvector[i], "%.15f");
    }
    out << '\n';
  }
  out << '\n'
      << pad("bound", 17) << pad("target", 11) << pad("rel", 4)
      << pad("target value", 20) << pad("bound value", 20) << pad("slack", 12)
      << "status\n";
  for (const auto& b : r.bounds) {
    out << pad(b.bound_id, 17) << pad(b.target_name, 11)
        << pad(std::string(to_string(b.relation)), 4);
    if (!b.applicable) {
      out << pad(fmt_double(b.target), 20) << pad("-", 20) << pad("-", 12)
          << "inapplicable\n";
      continue;
    }
    std::string status = *b.satisfied ? "ok" : "VIOLATED";
    if (b.equality) status += " (equality)";
    out << pad(fmt_double(b.target), 20) << pad(fmt_double(*b.value), 20)
        << pad(fmt_double(*b.slack, "%.3e"), 12) << status << '\n';
  }
  out << '\n'
      << r.bounds.size() << " bounds, " << r.count_applicable()
      << " applicable, " << r.count_violated() << " violated\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Batch verification
// ---------------------------------------------------------------------------

/// A random ensemble: per-instance seeds are successive outputs of
/// SplitMix64(seed); instance i uses k = kset[i mod |kset|],
/// n uniform in [k+1, nmax] and m uniform in
/// [ceil((n-1)/(k-1)), min(C(n,k), 3n)], all drawn from SplitMix64(instance
/// seed) before the same seed is handed to random_connected.
struct EnsembleSpec {
  std::size_t count = 200;
  std::uint64_t seed = 1;
  std::vector<std::size_t> kset{2, 3, 4};
  std::size_t nmax = 12;
};

inline std::vector<GeneratorSpec> ensemble_instances(const EnsembleSpec& e) {
  if (e.kset.empty()) throw DomainError("ensemble needs a non-empty k set");
  for (std::size_t k : e.kset) {
    if (k < 2 || k > kMaxUniformity) {
      throw DomainError("ensemble k=" + std::to_string(k) + " out of range");
    }
    if (e.nmax < k + 1) {
      throw DomainError("ensemble nmax=" + std::to_string(e.nmax) +
                        " too small for k=" + std::to_string(k));
    }
  }
  SplitMix64 master(e.seed);
  std::vector<GeneratorSpec> out;
  out.reserve(e.count);
  for (std::size_t i = 0; i < e.count; ++i) {
    GeneratorSpec g;
    g.family = Family::RandomConnected;
    g.seed = master.next();
    g.k = e.kset[i % e.kset.size()];
    SplitMix64 local(g.seed);
    g.n = local.uniform_between(g.k + 1, e.nmax);
    const std::uint64_t lo =
        std::max<std::size_t>(1, min_connected_edges(g.n, g.k));
    const std::uint64_t hi =
        std::min<std::uint64_t>(binomial_capped(g.n, g.k, 3 * g.n), 3 * g.n);
    g.m = local.uniform_between(lo, std::max(lo, hi));
    out.push_back(g);
  }
  return out;
}

inline std::string describe(const GeneratorSpec& g) {
  std::string s(to_string(g.family));
  switch (g.family) {
    case Family::SingleEdge: s += " k=" + std::to_string(g.k); break;
    case Family::Complete:
      s += " n=" + std::to_string(g.n) + " k=" + std::to_string(g.k);
      break;
    case Family::LoosePath:
      s += " k=" + std::to_string(g.k) + " l=" + std::to_string(g.length);
      break;
    case Family::Hyperstar:
      s += " k=" + std::to_string(g.k) + " t=" + std::to_string(g.t);
      break;
    case Family::RandomConnected:
      s += " n=" + std::to_string(g.n) + " k=" + std::to_string(g.k) +
           " m=" + std::to_string(g.m) + " seed=" + std::to_string(g.seed);
      break;
  }
  return s;
}

struct VerifyJob {
  std::string label;
  std::function<Hypergraph()> load;
};

struct InstanceOutcome {
  std::string label;
  std::size_t k = 0, n = 0, m = 0;
  bool regular = false;
  double rho = 0.0;
  std::vector<BoundReport> bounds;
  std::optional<std::string> error;

  std::size_t violations() const {
    return static_cast<std::size_t>(
        std::count_if(bounds.begin(), bounds.end(), [](const auto& b) {
          return b.applicable && !*b.satisfied;
        }));
  }
};

struct VerifySummary {
  std::vector<InstanceOutcome> instances;
  std::size_t checks = 0;
  std::size_t satisfied = 0;
  std::size_t violated = 0;
  std::size_t inapplicable = 0;
  std::size_t errors = 0;
};

/// Runs every job, `workers` at a time (0 = hardware concurrency). Results
/// are stored by job index so the summary never depends on scheduling.
inline VerifySummary run_verify(const std::vector<VerifyJob>& jobs,
                                const SpectralOptions& opts,
                                unsigned workers = 0) {
  VerifySummary summary;
  summary.instances.resize(jobs.size());

  auto run_one = [&](std::size_t i) {
    InstanceOutcome& out = summary.instances[i];
    out.label = jobs[i].label;
    try {
      Hypergraph h = jobs[i].load();
      out.k = h.uniformity();
      out.n = h.num_vertices();
      out.m = h.num_edges();
      out.regular = is_regular(h);
      SpectralOptions local;
      local.tol = opts.tol;
      local.max_iter = opts.max_iter;
      auto s = principal_eigenpair(h, local);
      out.rho = s.rho;
      out.bounds = full_report(h, s);
    } catch (const std::exception& ex) {
      out.error = ex.what();
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(1, jobs.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) run_one(i);
      });
    }
  }

  for (const auto& inst : summary.instances) {
    if (inst.error) {
      ++summary.errors;
      continue;
    }
    for (const auto& b : inst.bounds) {
      ++summary.checks;
      if (!b.applicable) ++summary.inapplicable;
      else if (*b.satisfied) ++summary.satisfied;
      else ++summary.violated;
    }
  }
  return summary;
}

inline std::vector<VerifyJob> ensemble_jobs(const EnsembleSpec& e) {
  std::vector<VerifyJob> jobs;
  for (const auto& g : ensemble_instances(e)) {
    jobs.push_back({describe(g), [g] { return generate(g); }});
  }
  return jobs;
}

/// Per-bound counts plus one line per violation or error.
inline std::string format_verify_summary(const VerifySummary& s) {
  using detail::pad;
  std::ostringstream out;
  std::vector<std::string> ids;
  for (const auto& inst : s.instances) {
    if (!inst.error) {
      for (const auto& b : inst.bounds) ids.push_back(b.bound_id);
      break;
    }
  }
  out << pad("bound", 17) << pad("satisfied", 11) << pad("violated", 10)
      << "inapplicable\n";
  for (std::size_t idx = 0; idx < ids.size(); ++idx) {
    std::size_t ok = 0, bad = 0, na = 0;
    for (const auto& inst : s.instances) {
      if (inst.error) continue;
      const auto& b = inst.bounds[idx];
      if (!b.applicable) ++na;
      else if (*b.satisfied) ++ok;
      else ++bad;
    }
    out << pad(ids[idx], 17) << pad(std::to_string(ok), 11)
        << pad(std::to_string(bad), 10) << na << '\n';
  }
  for (std::size_t i = 0; i < s.instances.size(); ++i) {
    const auto& inst = s.instances[i];
    if (inst.error) {
      out << "ERROR #" << i << " " << inst.label << ": " << *inst.error << '\n';
      continue;
    }
    for (const auto& b : inst.bounds) {
      if (b.applicable && !*b.satisfied) {
        out << "VIOLATION #" << i << " " << inst.label << ": " << b.bound_id
            << " target=" << detail::fmt_double(b.target, "%.17g")
            << " value=" << detail::fmt_double(*b.value, "%.17g") << '\n';
      }
    }
  }
  out << "instances=" << s.instances.size() << " checks=" << s.checks
      << " satisfied=" << s.satisfied << " violated=" << s.violated
      << " inapplicable=" << s.inapplicable << " errors=" << s.errors << '\n';
  return out.str();
}

/// One row per (instance, bound); instances in input order.
inline std::string format_verify_csv(const VerifySummary& s) {
  std::ostringstream out;
  out << "instance,label,k,n,m,regular,rho,bound_id,applicable,satisfied,"
         "equality,target,value,slack,error\n";
  auto num = [](double v) { return detail::fmt_double(v, "%.17g"); };
  for (std::size_t i = 0; i < s.instances.size(); ++i) {
    const auto& inst = s.instances[i];
    const std::string head = std::to_string(i) + ",\"" + inst.label + "\"," +
                             std::to_string(inst.k) + "," +
                             std::to_string(inst.n) + "," +
                             std::to_string(inst.m) + "," +
                             (inst.regular ? "1" : "0") + ",";
    if (inst.error) {
      std::string msg = *inst.error;
      std::replace(msg.begin(), msg.end(), '"', '\'');
      out << head << ",,,,,,,,\"" << msg << "\"\n";
      continue;
    }
    for (const auto& b : inst.bounds) {
      out << head << num(inst.rho) << "," << b.bound_id << ","
          << (b.applicable ? "1" : "0") << ",";
      if (b.applicable) {
        out << (*b.satisfied ? "1" : "0") << "," << (b.equality ? "1" : "0")
            << "," << num(b.target) << "," << num(*b.value) << ","
            << num(*b.slack);
      } else {
        out << ",," << num(b.target) << ",,";
      }
      out << ",\n";
    }
  }
  return out.str();
}

}  // namespace hgs
