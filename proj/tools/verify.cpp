#include <charconv>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aplus/errors.hpp"
#include "aplus/report.hpp"

namespace {

// "re" or "re,im".
std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto number = [](std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
      aplus::fail(aplus::ErrorKind::InvalidArgument, "cannot parse '" + std::string(s) + "' as a number");
    return v;
  };
  if (comma == std::string::npos) return {number(text), 0.0};
  return {number(std::string_view(text).substr(0, comma)), number(std::string_view(text).substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composition-operator verification workbench"};
  aplus::SuiteConfig cfg;
  std::string c1 = "0";
  double tol = 0.0;
  std::string csv;

  app.add_option("suite", cfg.suite, "thm1 | thm2 | counterexample | bflq | all")->required();
  app.add_option("--p", cfg.p, "sector parameter (> 1)");
  app.add_option("--A", cfg.A, "counterexample shift (>= 0)");
  app.add_option("--c1", c1, "polynomial constant term, 're' or 're,im'");
  app.add_option("--cr", cfg.cr, "polynomial linear coefficient (> 0)");
  app.add_option("--cr2", cfg.cr2, "polynomial quadratic coefficient (> 0)");
  app.add_option("--r", cfg.r, "polynomial base (integer >= 2)");
  app.add_option("--nmax", cfg.n_max, "largest basis index N");
  app.add_option("--order", cfg.order, "truncation order M");
  auto* tol_opt = app.add_option("--tol", tol, "relative stabilization tolerance of boundary quadrature");
  app.add_option("--workers", cfg.workers, "worker threads (0: all cores)");
  app.add_option("--seed", cfg.seed, "seed for sampled containment checks");
  app.add_option("--out", cfg.out, "JSON report path (default: stdout)");
  auto* csv_opt = app.add_option("--csv", csv, "directory for norm-table CSV files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  aplus::VerificationReport report;
  try {
    cfg.c1 = parse_complex(c1);
    if (tol_opt->count() > 0) cfg.tol = tol;
    if (csv_opt->count() > 0) cfg.csv_dir = csv;
    aplus::validate(cfg);
    report = aplus::run_suite(cfg);
    if (cfg.out.empty())
      std::cout << report.to_json().dump(2) << '\n';
    else
      aplus::write_json(report, cfg.out);
    if (cfg.csv_dir) aplus::write_csv(report, *cfg.csv_dir);
  } catch (const aplus::Error& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return 1;
  }

  std::cerr << report.count(aplus::Verdict::pass) << " pass, " << report.count(aplus::Verdict::evidence)
            << " evidence, " << report.count(aplus::Verdict::inconclusive) << " inconclusive, "
            << report.count(aplus::Verdict::fail) << " fail\n";
  for (const aplus::Record& r : report.records)
    if (r.verdict == aplus::Verdict::fail || r.verdict == aplus::Verdict::inconclusive)
      std::cerr << "  " << aplus::to_string(r.verdict) << ": " << r.id << (r.note.empty() ? "" : " (" + r.note + ")")
                << '\n';
  return report.exit_code();
}
