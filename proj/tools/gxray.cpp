// gxray: eigenvalues, exact eigenpair verification, sweeps and property runs.
// Exit codes: 0 pass, 1 failure or internal error, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gxray/gxray.hpp"

namespace {

using namespace gxray;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_eigval(int d, int k, int l, const std::string& method, int n) {
  if (k < 0 || l < 0) throw UsageError("k and l must be non-negative");
  if (method == "d2" && d != 2) throw UsageError("--method d2 requires -d 2");
  if ((method == "quad" || method == "gegenbauer") && d < 3) throw UsageError("--method " + method + " requires d >= 3");
  if (d < 2) throw UsageError("d must be at least 2");
  const long big = big_lambda({k, l, d});
  Json out;
  out["k"] = k;
  out["l"] = l;
  out["d"] = d;
  out["method"] = method;
  double value = 0.0;
  if (method == "exact" || method == "d2") {
    const PiScalar lam = method == "exact" ? lambda_exact(k, l, d) : d2_closed_form(k, l);
    value = pi_to_float(lam);
    out["lambda"] = lam.to_string();
    out["lambda_float"] = value;
    out["lambda_exact"] = to_json(lam);
  } else {
    value = method == "quad" ? lambda_quad(k, l, d, n) : lambda_gegenbauer(k, l, d, n);
    out["lambda"] = value;
  }
  out["Lambda"] = big;
  out["scaled"] = value * std::sqrt(static_cast<double>(big));
  std::cout << out.dump() << '\n';
  return kPass;
}

int cmd_verify(int d, int kmax, int lmax, const std::string& harmonic) {
  const Harmonic h = harmonic == "zonal" ? Harmonic::zonal : Harmonic::complex;
  if (d < 2) throw UsageError("d must be at least 2");
  if (h == Harmonic::zonal && d < 3) throw UsageError("zonal harmonics require d >= 3");
  std::vector<std::string> failing;
  std::cout << "k,l,lambda,lambda_float,status\n";
  for (int k = 0; k <= kmax; ++k) {
    for (int l = 0; l <= lmax; ++l) {
      std::string status = "ok";
      std::string lam_str;
      double lam_float = std::nan("");
      try {
        const EigenpairCheck c = verify_eigenpair({k, l, d}, h);
        lam_str = c.lambda.to_string();
        lam_float = pi_to_float(c.lambda);
        if (!c.residual_zero) {
          status = "residual";
        } else if (!(c.lambda == lambda_exact(k, l, d))) {
          status = "mismatch_lambda_exact";
        } else if (d == 2 && !(c.lambda == d2_closed_form(k, l))) {
          status = "mismatch_d2_closed_form";
        }
      } catch (const TheoremViolation& e) {
        status = std::string("violation: ") + e.what();
      }
      std::cout << k << ',' << l << ',' << lam_str << ',' << format_double(lam_float) << ',' << status << '\n';
      if (status != "ok") failing.push_back("(" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
  }
  if (!failing.empty()) {
    std::cerr << "failing pairs:";
    for (const auto& f : failing) std::cerr << ' ' << f;
    std::cerr << '\n';
    return kFail;
  }
  return kPass;
}

int cmd_sweep(int d, int kmax, int lmax, const std::string& out_path, const std::string& format,
              const std::vector<std::string>& methods) {
  if (d < 2) throw UsageError("d must be at least 2");
  SweepOptions opts;
  opts.methods.clear();
  for (const auto& m : methods) {
    if (m == "exact") opts.methods.insert(Method::exact);
    if (m == "quad") opts.methods.insert(Method::quad);
    if (m == "gegenbauer") opts.methods.insert(Method::gegenbauer);
  }
  const std::vector<EigenRecord> records = (kmax < 0 || lmax < 0) ? std::vector<EigenRecord>{} : sweep(d, kmax, lmax, opts);
  std::ostringstream body;
  if (format == "json") {
    body << records_to_json(records).dump(2) << '\n';
  } else {
    write_csv(body, records);
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << body.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    f << body.str();
    if (!f) throw std::runtime_error("write failed for " + out_path);
  }
  return kPass;
}

int cmd_props(int d, std::uint64_t seed, int trials) {
  if (d < 2) throw UsageError("d must be at least 2");
  if (trials < 0) throw UsageError("trials must be non-negative");
  PropertyOptions opts;
  opts.d = d;
  opts.seed = seed;
  opts.trials = trials;
  const auto results = run_property_suite(opts);
  bool all = true;
  std::cout << "d=" << d << " seed=" << seed << " trials=" << trials << '\n';
  for (const auto& r : results) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.trials - r.failures << "/" << r.trials << ")\n";
    if (!r.passed()) {
      all = false;
      std::cout << "  counterexample: " << r.counterexample << '\n';
    }
  }
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian-weighted X-ray transform: eigenvalues of the normal operator"};
  app.require_subcommand(1);

  int d = 3;
  int k = 0;
  int l = 0;
  int n = -1;
  std::string method = "exact";
  auto* eig = app.add_subcommand("eigval", "Evaluate lambda_{k,l} in dimension d");
  eig->add_option("-d", d, "Dimension")->capture_default_str();
  eig->add_option("-k", k, "Laguerre index")->capture_default_str();
  eig->add_option("-l", l, "Harmonic degree")->capture_default_str();
  eig->add_option("--method", method, "exact|quad|gegenbauer|d2")
      ->check(CLI::IsMember({"exact", "quad", "gegenbauer", "d2"}))
      ->capture_default_str();
  eig->add_option("-n", n, "Quadrature nodes (default k+l+d+4)");

  int kmax = 4;
  int lmax = 4;
  std::string harmonic = "complex";
  auto* ver = app.add_subcommand("verify", "Exactly verify N phi = lambda phi");
  ver->add_option("-d", d, "Dimension")->capture_default_str();
  ver->add_option("--kmax", kmax)->capture_default_str();
  ver->add_option("--lmax", lmax)->capture_default_str();
  ver->add_option("--harmonic", harmonic, "complex|zonal")
      ->check(CLI::IsMember({"complex", "zonal"}))
      ->capture_default_str();

  std::string out_path;
  std::string format = "csv";
  std::vector<std::string> methods{"quad"};
  auto* swp = app.add_subcommand("sweep", "Tabulate lambda, lambda*sqrt(Lambda) and the main-term error");
  swp->add_option("-d", d, "Dimension")->capture_default_str();
  swp->add_option("--kmax", kmax)->capture_default_str();
  swp->add_option("--lmax", lmax)->capture_default_str();
  swp->add_option("-o,--out", out_path, "Output path (stdout if omitted)");
  swp->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  swp->add_option("--methods", methods, "Any of exact, quad, gegenbauer")
      ->check(CLI::IsMember({"exact", "quad", "gegenbauer"}))
      ->delimiter(',');

  std::uint64_t seed = 42;
  int trials = 100;
  auto* props = app.add_subcommand("props", "Randomized operator-algebra checks");
  props->add_option("-d", d, "Dimension")->capture_default_str();
  props->add_option("--seed", seed)->capture_default_str();
  props->add_option("--trials", trials)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*eig) return cmd_eigval(d, k, l, method, n);
    if (*ver) return cmd_verify(d, kmax, lmax, harmonic);
    if (*swp) return cmd_sweep(d, kmax, lmax, out_path, format, methods);
    if (*props) return cmd_props(d, seed, trials);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
