#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "hgs/report.hpp"
#include "oracles.hpp"

namespace hgs {
namespace {

AnalysisReport loose_path_report(bool eigenvector) {
  return analyze(loose_path(3, 2), "loose_path k=3 l=2", SpectralOptions{},
                 eigenvector);
}

TEST(AnalysisJson, Shape) {
  auto j = to_json(loose_path_report(false));
  EXPECT_EQ(j["schema"], "hgs-analysis/1");
  EXPECT_EQ(j["toolkit_version"], kToolkitVersion);
  EXPECT_EQ(j["hypergraph"]["n"], 5);
  EXPECT_EQ(j["hypergraph"]["diameter"], 2);
  EXPECT_EQ(j["hypergraph"]["regular"], false);
  EXPECT_FALSE(j["spectral"].contains("eigenvector"));
  EXPECT_EQ(j["bounds"].size(), 15u);
  EXPECT_EQ(j["summary"]["reports"], 15);
  EXPECT_EQ(j["summary"]["applicable"], 10);
  EXPECT_EQ(j["summary"]["violated"], 0);
  EXPECT_NEAR(j["spectral"]["rho"].get<double>(), std::cbrt(2.0), 1e-10);
  const auto& inapplicable = j["bounds"][10];
  EXPECT_EQ(inapplicable["bound_id"], "cor3.8");
  EXPECT_FALSE(inapplicable.contains("value"));
  EXPECT_FALSE(inapplicable.contains("satisfied"));

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "toolkit_version", "input",
                                            "tolerances", "hypergraph",
                                            "spectral", "bounds", "summary"}));
}

TEST(AnalysisJson, RoundTripIsExact) {
  for (bool ev : {false, true}) {
    auto r = loose_path_report(ev);
    auto j = to_json(r);
    auto back = analysis_report_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_EQ(back.params.rho, r.params.rho);
    EXPECT_EQ(back.eigenvector, r.eigenvector);
    ASSERT_EQ(back.bounds.size(), r.bounds.size());
    for (std::size_t i = 0; i < r.bounds.size(); ++i) {
      EXPECT_EQ(back.bounds[i].bound_id, r.bounds[i].bound_id);
      EXPECT_EQ(back.bounds[i].value, r.bounds[i].value);
      EXPECT_EQ(back.bounds[i].slack, r.bounds[i].slack);
      EXPECT_EQ(back.bounds[i].equality_check, r.bounds[i].equality_check);
    }
  }
}

TEST(AnalysisJson, RejectsOtherSchema) {
  auto j = to_json(loose_path_report(false));
  j["schema"] = "something-else/9";
  EXPECT_THROW(analysis_report_from_json(j), Error);
}

TEST(FormatTable, MentionsEveryBound) {
  auto r = loose_path_report(true);
  const std::string t = format_table(r);
  for (const auto& b : r.bounds) {
    EXPECT_NE(t.find(b.bound_id), std::string::npos) << b.bound_id;
  }
  EXPECT_NE(t.find("inapplicable"), std::string::npos);
  EXPECT_NE(t.find("(equality)"), std::string::npos);
  EXPECT_NE(t.find("eigenvector"), std::string::npos);
  EXPECT_NE(t.find("15 bounds, 10 applicable, 0 violated"), std::string::npos);
  EXPECT_EQ(t.find("VIOLATED"), std::string::npos);
}

TEST(Ensemble, DerivationIsStableAndInRange) {
  EnsembleSpec spec;
  spec.count = 90;
  spec.seed = 123;
  auto a = ensemble_instances(spec);
  auto b = ensemble_instances(spec);
  ASSERT_EQ(a.size(), 90u);
  SplitMix64 master(123);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(describe(a[i]), describe(b[i]));
    EXPECT_EQ(a[i].seed, master.next());
    EXPECT_EQ(a[i].k, spec.kset[i % 3]);
    EXPECT_GE(a[i].n, a[i].k + 1);
    EXPECT_LE(a[i].n, spec.nmax);
    EXPECT_GE(a[i].m, min_connected_edges(a[i].n, a[i].k));
    EXPECT_LE(a[i].m, 3 * a[i].n);
    EXPECT_LE(a[i].m, binomial_capped(a[i].n, a[i].k));
  }
  spec.kset = {};
  EXPECT_THROW(ensemble_instances(spec), DomainError);
  spec.kset = {5};
  spec.nmax = 5;
  EXPECT_THROW(ensemble_instances(spec), DomainError);
}

TEST(Verify, SummaryIndependentOfWorkerCount) {
  EnsembleSpec spec;
  spec.count = 24;
  spec.seed = 8;
  auto jobs = ensemble_jobs(spec);
  auto serial = run_verify(jobs, SpectralOptions{}, 1);
  auto parallel = run_verify(jobs, SpectralOptions{}, 4);
  EXPECT_EQ(format_verify_summary(serial), format_verify_summary(parallel));
  EXPECT_EQ(format_verify_csv(serial), format_verify_csv(parallel));
  EXPECT_EQ(serial.instances.size(), 24u);
  EXPECT_EQ(serial.checks, 24u * 15u);
  EXPECT_EQ(serial.satisfied + serial.violated + serial.inapplicable,
            serial.checks);
  EXPECT_EQ(serial.violated, 0u);
  EXPECT_EQ(serial.errors, 0u);
}

TEST(Verify, ErrorsAreCountedNotThrown) {
  std::vector<VerifyJob> jobs{
      {"ok", [] { return loose_path(3, 2); }},
      {"split", [] { return Hypergraph(2, 4, {{0, 1}, {2, 3}}); }},
      {"edgeless", [] { return Hypergraph(2, 1, {}); }}};
  auto s = run_verify(jobs, SpectralOptions{}, 2);
  EXPECT_EQ(s.errors, 2u);
  EXPECT_EQ(s.checks, 15u);
  ASSERT_TRUE(s.instances[1].error.has_value());
  EXPECT_NE(s.instances[1].error->find("connected"), std::string::npos);
  const std::string text = format_verify_summary(s);
  EXPECT_NE(text.find("ERROR #1 split"), std::string::npos);
  EXPECT_NE(text.find("errors=2"), std::string::npos);
}

TEST(Verify, CsvHasFixedColumnCount) {
  std::vector<VerifyJob> jobs{
      {"p3", [] { return testing::path3(); }},
      {"bad", [] { return Hypergraph(2, 4, {{0, 1}, {2, 3}}); }}};
  auto csv = format_verify_csv(run_verify(jobs, SpectralOptions{}, 1));
  std::istringstream in(csv);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    // Labels and messages here carry no commas.
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 14) << line;
  }
  EXPECT_EQ(rows, 1u + 15u + 1u);
}

}  // namespace
}  // namespace hgs
