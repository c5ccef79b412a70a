// Command-line front end: analyze, generate, verify.
//
// Exit codes: 0 ok, 1 input/usage error, 2 bound violation.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hgs/hgs.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hgs::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

hgs::Hypergraph load_hypergraph(const std::string& path) {
  try {
    return hgs::parse_hypergraph(read_file(path));
  } catch (const hgs::ParseError& e) {
    throw hgs::ParseError(0, path + ": " + e.what());
  }
}

struct AnalyzeArgs {
  std::string path;
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  bool json = false;
  bool eigenvector = false;
};

int run_analyze(const AnalyzeArgs& a) {
  hgs::SpectralOptions opts;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  try {
    auto h = load_hypergraph(a.path);
    auto report = hgs::analyze(h, a.path, opts, a.eigenvector);
    if (a.json) {
      std::cout << hgs::to_json(report).dump(2) << '\n';
    } else {
      std::cout << hgs::format_table(report);
    }
    return report.count_violated() == 0 ? kExitOk : kExitViolation;
  } catch (const hgs::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const hgs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

struct GenerateArgs {
  std::string family;
  std::size_t k = 0, n = 0, t = 0, l = 0, m = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  auto family = hgs::family_from_string(a.family);
  if (!family) {
    std::cerr << "error: unknown family \"" << a.family
              << "\" (single_edge, complete, loose_path, hyperstar, "
                 "random_connected)\n";
    return kExitInput;
  }
  hgs::GeneratorSpec spec;
  spec.family = *family;
  spec.k = a.k;
  spec.n = a.n;
  spec.t = a.t;
  spec.length = a.l;
  spec.m = a.m;
  spec.seed = a.seed;
  try {
    auto h = hgs::generate(spec);
    const std::string text = hgs::serialize_hypergraph(h);
    if (a.out == "-") {
      std::cout << text;
    } else {
      std::ofstream f(a.out, std::ios::binary);
      if (!f || !(f << text)) throw hgs::Error("cannot write " + a.out);
    }
    std::cerr << "wrote " << a.out << ": " << hgs::describe(spec) << " (k="
              << h.uniformity() << " n=" << h.num_vertices()
              << " m=" << h.num_edges() << ")\n";
    return kExitOk;
  } catch (const hgs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

struct VerifyArgs {
  std::string dir;
  bool ensemble = false;
  std::size_t count = 200;
  std::uint64_t seed = 1;
  std::vector<std::size_t> kset{2, 3, 4};
  std::size_t nmax = 12;
  std::string csv;
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  unsigned jobs = 0;
};

int run_verify(const VerifyArgs& a) {
  hgs::SpectralOptions opts;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  std::vector<hgs::VerifyJob> jobs;
  try {
    if (a.ensemble) {
      hgs::EnsembleSpec e;
      e.count = a.count;
      e.seed = a.seed;
      e.kset = a.kset;
      e.nmax = a.nmax;
      jobs = hgs::ensemble_jobs(e);
    } else {
      namespace fs = std::filesystem;
      if (a.dir.empty()) {
        std::cerr << "error: verify needs a directory or --ensemble\n";
        return kExitInput;
      }
      if (!fs::is_directory(a.dir)) {
        std::cerr << "error: " << a.dir << " is not a directory\n";
        return kExitInput;
      }
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(a.dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path().string());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        jobs.push_back({f, [f] { return load_hypergraph(f); }});
      }
    }
  } catch (const hgs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  if (jobs.empty()) {
    std::cerr << "error: no hypergraphs to verify\n";
    return kExitInput;
  }

  auto summary = hgs::run_verify(jobs, opts, a.jobs);
  std::cout << hgs::format_verify_summary(summary);
  if (!a.csv.empty()) {
    std::ofstream f(a.csv, std::ios::binary);
    if (!f || !(f << hgs::format_verify_csv(summary))) {
      std::cerr << "error: cannot write " << a.csv << '\n';
      return kExitInput;
    }
  }
  if (summary.violated > 0) return kExitViolation;
  if (summary.errors > 0) return kExitInput;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral radius, principal eigenvector and eigenvector/degree "
               "bounds of connected uniform hypergraphs"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "Analyze a hypergraph file");
  cmd_analyze->add_option("file", analyze.path, "Hypergraph file")->required();
  cmd_analyze->add_option("--tol", analyze.tol, "CW bracket width")
      ->check(CLI::PositiveNumber);
  cmd_analyze->add_option("--max-iter", analyze.max_iter,
                          "Power iteration limit");
  cmd_analyze->add_flag("--json", analyze.json, "Emit the JSON report");
  cmd_analyze->add_flag("--eigenvector", analyze.eigenvector,
                        "Include the principal eigenvector");

  GenerateArgs generate;
  auto* cmd_generate =
      app.add_subcommand("generate", "Write a generated hypergraph file");
  cmd_generate
      ->add_option("family", generate.family,
                   "single_edge | complete | loose_path | hyperstar | "
                   "random_connected")
      ->required();
  cmd_generate->add_option("--k", generate.k, "Edge cardinality");
  cmd_generate->add_option("--n", generate.n, "Vertex count");
  cmd_generate->add_option("--t", generate.t, "Hyperstar edge count");
  cmd_generate->add_option("--l", generate.l, "Loose path length");
  cmd_generate->add_option("--m", generate.m, "Edge count (random)");
  cmd_generate->add_option("--seed", generate.seed, "Seed (random)");
  cmd_generate->add_option("-o,--out", generate.out, "Output path, - for stdout")
      ->required();

  VerifyArgs verify;
  auto* cmd_verify =
      app.add_subcommand("verify", "Check every bound on many hypergraphs");
  cmd_verify->add_option("dir", verify.dir, "Directory of hypergraph files");
  cmd_verify->add_flag("--ensemble", verify.ensemble,
                       "Verify a seeded random ensemble instead");
  cmd_verify->add_option("--count", verify.count, "Ensemble size");
  cmd_verify->add_option("--seed", verify.seed, "Ensemble seed");
  cmd_verify->add_option("--kset", verify.kset, "Edge cardinalities")
      ->delimiter(',');
  cmd_verify->add_option("--nmax", verify.nmax, "Largest vertex count");
  cmd_verify->add_option("--csv", verify.csv, "Write per-bound rows as CSV");
  cmd_verify->add_option("--tol", verify.tol, "CW bracket width")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--max-iter", verify.max_iter,
                         "Power iteration limit");
  cmd_verify->add_option("--jobs", verify.jobs,
                         "Worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*cmd_analyze) return run_analyze(analyze);
  if (*cmd_generate) return run_generate(generate);
  if (!verify.ensemble && verify.dir.empty()) {
    std::cerr << "error: verify needs a directory or --ensemble\n";
    return kExitInput;
  }
  if (verify.ensemble && !verify.dir.empty()) {
    std::cerr << "error: pass either a directory or --ensemble, not both\n";
    return kExitInput;
  }
  return run_verify(verify);
}
