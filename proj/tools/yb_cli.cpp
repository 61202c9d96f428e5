// Command-line interface.
//
//   yb build    --family F [--spins S] [--spectral u[,v]] --out FILE
//   yb verify   --suite {rational|trig|modular|all} [--tol T] [--seed N] [--json FILE]
//   yb report   --in FILE
//   yb selftest
//
// Exit status is nonzero iff any verification case fails (or an error occurs).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "yb/serialize.hpp"
#include "yb/suites.hpp"

using namespace yb;

namespace {

std::vector<int> parse_spins(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> parse_spectral(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<std::string> spin_labels(const std::vector<int>& v) {
  std::vector<std::string> out;
  for (int x : v) out.push_back(std::to_string(x));
  return out;
}

int do_build(const std::string& family, const std::string& spins_arg,
             const std::string& spectral_arg, const std::string& out_path) {
  std::vector<int> spins = spins_arg.empty() ? std::vector<int>{} : parse_spins(spins_arg);
  std::vector<double> spec = spectral_arg.empty() ? std::vector<double>{}
                                                  : parse_spectral(spectral_arg);
  MatrixBundle b;
  if (family == "yang") {
    b = bundle_poly("yang", {}, yang_r(rsym("u")), /*laurent=*/false);
  } else if (family == "q_yang") {
    b = bundle_poly("q_yang", {}, q_yang_r(tsym("U")), /*laurent=*/true);
  } else if (family == "lax_rational") {
    if (spins.size() != 1) throw CLI::ValidationError("--spins", "expected one integer n");
    b = bundle_poly("lax_rational", spin_labels(spins), lax_rational(spins[0], rsym("u")),
                    /*laurent=*/false);
  } else if (family == "trig_lax") {
    if (spins.size() != 1) throw CLI::ValidationError("--spins", "expected one integer n");
    b = bundle_poly("trig_lax", spin_labels(spins), trig_lax(spins[0], tsym("U")),
                    /*laurent=*/true);
  } else if (family == "sl2c") {
    if (spins.size() != 4)
      throw CLI::ValidationError("--spins", "expected n,nb,m,mb");
    b = bundle_poly("sl2c", spin_labels(spins),
                    reduce_sl2c(spins[0], spins[1], spins[2], spins[3]), /*laurent=*/false);
  } else if (family == "modular") {
    if (spins.size() != 4)
      throw CLI::ValidationError("--spins", "expected n1,m1,n2,m2");
    if (spec.empty()) throw CLI::ValidationError("--spectral", "expected re[,im]");
    cplx u{spec[0], spec.size() > 1 ? spec[1] : 0.0};
    Quasiperiods p = Quasiperiods::standard();
    auto red = reduce_modular_finite(p, u, spins[0], spins[1], spins[2], spins[3]);
    b = bundle_complex("modular", spin_labels(spins), red.mat);
    std::fprintf(stderr, "closure residual: %.3e\n", red.closure);
  } else if (family == "r4_trig") {
    if (spec.empty()) throw CLI::ValidationError("--spectral", "expected re[,im]");
    cplx u{spec[0], spec.size() > 1 ? spec[1] : 0.0};
    b = bundle_complex("r4_trig", {}, r4_trig(Quasiperiods::standard(), u));
  } else {
    throw CLI::ValidationError("--family",
                               "unknown family (yang, q_yang, lax_rational, trig_lax, "
                               "sl2c, modular, r4_trig)");
  }
  if (out_path == "-")
    std::cout << export_matrix(b) << "\n";
  else
    export_matrix(b, out_path);
  return 0;
}

void print_reports(const std::vector<Report>& reps) {
  for (const auto& r : reps)
    for (const auto& c : r.cases) {
      if (c.exact)
        std::printf("[%s] %s :: %s (exact, %.2fs)\n", c.pass ? "PASS" : "FAIL",
                    r.suite.c_str(), c.name.c_str(), c.seconds);
      else
        std::printf("[%s] %s :: %s (residual %.3e, tol %.1e, %.2fs)\n",
                    c.pass ? "PASS" : "FAIL", r.suite.c_str(), c.name.c_str(), c.residual,
                    c.tolerance, c.seconds);
    }
}

int do_verify(const std::string& suite, double tol, unsigned seed,
              const std::string& json_path) {
  auto reps = suites::run_criteria(suites::suite_criteria(suite), seed);
  // A user-supplied tolerance overrides the per-case default for numeric
  // checks; exact checks are unaffected.
  if (tol > 0)
    for (auto& r : reps)
      for (auto& c : r.cases)
        if (!c.exact) {
          c.tolerance = tol;
          c.pass = c.residual < tol;
        }
  print_reports(reps);
  bool all = true;
  for (const auto& r : reps) all = all && r.all_pass();
  if (!json_path.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reps) arr.push_back(nlohmann::json::parse(report_to_json(r)));
    nlohmann::json top;
    top["suite"] = suite;
    top["pass"] = all;
    top["reports"] = arr;
    std::ofstream f(json_path);
    f << top.dump(2) << "\n";
  }
  std::printf("%s\n", all ? "all checks passed" : "FAILURES present");
  return all ? 0 : 1;
}

int do_report(const std::string& in_path) {
  std::ifstream f(in_path);
  if (!f) {
    std::fprintf(stderr, "cannot open %s\n", in_path.c_str());
    return 1;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  nlohmann::json j = nlohmann::json::parse(ss.str());
  if (j.contains("reports")) {
    // Verification report.
    for (const auto& r : j["reports"])
      for (const auto& c : r["cases"]) {
        bool pass = c["pass"].get<bool>();
        if (c["exact"].get<bool>())
          std::printf("[%s] %s :: %s (exact)\n", pass ? "PASS" : "FAIL",
                      r["suite"].get<std::string>().c_str(),
                      c["name"].get<std::string>().c_str());
        else
          std::printf("[%s] %s :: %s (residual %.3e, tol %.1e)\n", pass ? "PASS" : "FAIL",
                      r["suite"].get<std::string>().c_str(),
                      c["name"].get<std::string>().c_str(), c["residual"].get<double>(),
                      c["tolerance"].get<double>());
      }
    bool all = j["pass"].get<bool>();
    std::printf("%s\n", all ? "all checks passed" : "FAILURES present");
    return all ? 0 : 1;
  }
  // Matrix bundle.
  MatrixBundle b = import_matrix_text(ss.str());
  std::printf("family: %s\n", b.family.c_str());
  std::printf("ring:   %s\n", b.ring_kind.c_str());
  std::printf("size:   %dx%d\n", b.rows(), b.cols());
  if (!b.spins.empty()) {
    std::printf("spins: ");
    for (const auto& s : b.spins) std::printf(" %s", s.c_str());
    std::printf("\n");
  }
  if (b.cleared_denominator_power)
    std::printf("cleared denominator power: %d\n", b.cleared_denominator_power);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional Yang-Baxter solutions: builders and verifiers"};
  app.require_subcommand(1);

  std::string family, spins, spectral, out_path = "-";
  auto* build = app.add_subcommand("build", "construct a solution matrix and export JSON");
  build->add_option("--family", family, "yang | q_yang | lax_rational | trig_lax | sl2c | modular | r4_trig")
      ->required();
  build->add_option("--spins", spins, "comma-separated spin labels (family dependent)");
  build->add_option("--spectral", spectral, "spectral parameter re[,im] (numeric families)");
  build->add_option("--out", out_path, "output file, '-' for stdout");

  std::string suite = "all", json_path;
  double tol = 0;
  unsigned seed = 20240817u;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", suite, "rational | trig | modular | all");
  verify->add_option("--tol", tol, "override tolerance for numeric checks");
  verify->add_option("--seed", seed, "seed for randomized test functions");
  verify->add_option("--json", json_path, "write a machine-readable report");

  std::string in_path;
  auto* report = app.add_subcommand("report", "pretty-print a JSON report or matrix file");
  report->add_option("--in", in_path, "input JSON file")->required();

  app.add_subcommand("selftest", "run every check in every suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return do_build(family, spins, spectral, out_path);
    if (verify->parsed()) return do_verify(suite, tol, seed, json_path);
    if (report->parsed()) return do_report(in_path);
    return do_verify("all", 0, seed, "");  // selftest
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
