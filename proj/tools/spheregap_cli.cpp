// spheregap: certify, evaluate, and explore the even-order Legendre gap inequalities.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spheregap/spheregap.hpp"

namespace {

using namespace spheregap;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + out_path + "'");
  f << text;
}

// ---- certify ----------------------------------------------------------------

struct CertifyFlags {
  std::string inequality = "improved";
  unsigned ell_min = 1;
  unsigned ell_max = 10;
  std::string dims = "2..5";
  std::string out;
  std::string format = "text";
  unsigned workers = default_workers();
  bool no_certificates = false;
};

int cmd_certify(const CertifyFlags& f) {
  CertifySweep sweep;
  if (f.inequality == "improved") sweep.inequalities = {Inequality::improved};
  else if (f.inequality == "original") sweep.inequalities = {Inequality::original};
  else sweep.inequalities = {Inequality::improved, Inequality::original};
  sweep.ell_min = f.ell_min;
  sweep.ell_max = f.ell_max;
  if (f.ell_min < 1 || f.ell_max < f.ell_min) throw UsageError("need 1 <= --ell-min <= --ell-max");
  try {
    sweep.dims = parse_dims(f.dims);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  sweep.workers = f.workers;

  const auto report = run_certify_sweep(sweep);
  std::string text;
  if (f.format == "json") text = to_json(report, !f.no_certificates).dump(2) + "\n";
  else if (f.format == "csv") text = to_csv(report);
  else text = to_text(report);
  emit(text, f.out);
  const auto s = report.summary();
  if (!f.out.empty())
    std::cout << "certify: total " << s.total << ", passed " << s.passed << ", failed " << s.failed << "\n";
  for (const auto& r : report.rows)
    if (r.certificate.verdict == Verdict::violated)
      std::cerr << "violated: " << to_string(r.inequality) << " ell=" << r.ell << " d=" << r.d << " witness x="
                << r.certificate.witness->to_string() << "\n";
  return s.failed == 0 ? kOk : kFailed;
}

// ---- eval -------------------------------------------------------------------

struct EvalFlags {
  unsigned ell = 0;
  int dim = 3;
  std::vector<double> xs;
  unsigned grid = 0;
  std::string method = "all";
  unsigned quad_n = 0;
  std::string format = "text";
};

constexpr double kEvalAgreement = 1e-9;

int cmd_eval(const EvalFlags& f) {
  if (f.dim < 2) throw UsageError("dimension must be ≥ 2");
  const Dimension d(f.dim);
  bool use_rec = f.method == "recurrence" || f.method == "all";
  bool use_int = f.method == "integral" || f.method == "all";
  bool use_trig = f.method == "trig" || f.method == "all";
  if (f.method == "integral" && f.dim < 3) throw UsageError("integral method needs --dim >= 3");
  if (f.method == "trig" && f.dim != 2) throw UsageError("trig method needs --dim 2");
  if (f.method == "all") {
    use_int = f.dim >= 3;
    use_trig = f.dim == 2;
  }
  std::vector<double> xs = f.xs;
  if (f.grid > 0) {
    if (f.grid == 1) xs.push_back(0.0);
    for (unsigned k = 0; f.grid > 1 && k < f.grid; ++k) xs.push_back(-1.0 + 2.0 * k / (f.grid - 1));
  }
  if (xs.empty()) throw UsageError("give at least one --x or --grid N");
  for (double x : xs)
    if (!(std::abs(x) <= 1.0)) throw UsageError("--x values must lie in [-1, 1]");
  const unsigned n = f.quad_n ? f.quad_n : default_integral_nodes(f.ell);
  if (use_int && n < (f.ell + 1) / 2 + 1) throw UsageError("--quad-n too small for exact integration");

  nlohmann::json rows = nlohmann::json::array();
  double worst = 0.0;
  std::ostringstream text;
  text << std::setprecision(17);
  text << "x";
  if (use_rec) text << "\trecurrence";
  if (use_int) text << "\tintegral";
  if (use_trig) text << "\ttrig";
  text << "\tmax_deviation\n";
  for (double x : xs) {
    std::vector<double> vals;
    nlohmann::json row{{"x", x}};
    if (use_rec) row["recurrence"] = vals.emplace_back(evaluate_float(f.ell, d, x));
    if (use_int) row["integral"] = vals.emplace_back(integral_eval(f.ell, d, x, n));
    if (use_trig) row["trig"] = vals.emplace_back(chebyshev_eval(f.ell, std::acos(x)));
    double dev = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j) dev = std::max(dev, std::abs(vals[i] - vals[j]));
    row["max_deviation"] = dev;
    worst = std::max(worst, dev);
    rows.push_back(row);
    text << x;
    for (double v : vals) text << '\t' << v;
    text << '\t' << dev << '\n';
  }
  if (f.format == "json") {
    nlohmann::json j{{"schema", report_schema}, {"tool_version", tool_version}, {"command", "eval"},
                     {"parameters", {{"ell", f.ell}, {"dim", f.dim}, {"method", f.method}, {"quad_n", n}}},
                     {"rows", rows}, {"max_deviation", worst}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return worst <= kEvalAgreement ? kOk : kFailed;
}

// ---- spectral ---------------------------------------------------------------

struct SpectralFlags {
  int dim = 3;
  std::string kernel;
  unsigned ell_max = 10;
  unsigned quad_n = 0;
  std::string format = "text";
};

int cmd_spectral(const SpectralFlags& f) {
  if (f.dim < 2) throw UsageError("dimension must be ≥ 2");
  if (f.ell_max < 1) throw UsageError("--ell-max must be >= 1");
  std::string text = f.kernel;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read kernel file '" + text.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const Dimension d(f.dim);
  KernelSpec kernel;
  try {
    kernel = kernel_from_json_text(text);
    validate(kernel, d);
  } catch (const KernelError& e) {
    throw UsageError(e.what());
  }
  const unsigned n = f.quad_n ? f.quad_n : default_spectral_nodes(f.ell_max);
  const auto res = verify_eigencomp(d, kernel, f.ell_max, n);
  const bool ok = res.margins_ok() && res.poincare.agree();

  if (f.format == "json") {
    nlohmann::json lam = nlohmann::json::object(), margins = nlohmann::json::object();
    for (const auto& [l, v] : res.tilde_lambda) lam[std::to_string(l)] = v;
    for (const auto& [l, v] : res.comparison_margins) margins[std::to_string(l)] = v;
    nlohmann::json j{{"schema", report_schema},
                     {"tool_version", tool_version},
                     {"command", "spectral"},
                     {"parameters", {{"dim", f.dim}, {"kernel", to_json(kernel)}, {"ell_max", f.ell_max}, {"quad_n", n}}},
                     {"tilde_lambda", lam},
                     {"poincare_constant", {{"from_moment", res.poincare.from_moment},
                                            {"from_eigenvalue", res.poincare.from_eigenvalue},
                                            {"relative_difference", res.poincare.relative_difference()}}},
                     {"comparison_margins", margins},
                     {"passed", ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << std::setprecision(12);
    std::cout << "d = " << f.dim << ", kernel = " << to_json(kernel).dump() << ", quad-n = " << n << "\n";
    std::cout << "ell\tlambda\ttilde_lambda\n";
    for (const auto& [l, v] : res.tilde_lambda) std::cout << l << '\t' << eigenvalue(l, d).value << '\t' << v << '\n';
    std::cout << "C_P (moment)     = " << res.poincare.from_moment << "\n";
    std::cout << "C_P (eigenvalue) = " << res.poincare.from_eigenvalue << "\n";
    std::cout << "relative difference = " << res.poincare.relative_difference() << "\n";
    std::cout << "ell\tmargin\n";
    for (const auto& [l, v] : res.comparison_margins) std::cout << l << '\t' << v << '\n';
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kFailed;
}

// ---- proofcheck -------------------------------------------------------------

struct ProofFlags {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  unsigned ell_max = 40;
  std::string dims = "2..10";
};

int cmd_proofcheck(const ProofFlags& f) {
  ProofBatteryOptions opt;
  opt.samples = f.samples;
  opt.seed = f.seed;
  opt.ell_max = f.ell_max;
  if (f.ell_max < 1) throw UsageError("--ell-max must be >= 1");
  try {
    opt.dims = parse_dims(f.dims);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto rep = run_proof_battery(opt);
  std::cout << std::setprecision(6);
  std::cout << std::left << std::setw(26) << "checker" << std::setw(16) << "worst" << std::setw(12) << "threshold"
            << "status\n";
  for (const auto& c : rep.checkers) {
    std::cout << std::left << std::setw(26) << c.name << std::setw(16) << c.worst << std::setw(12) << c.threshold
              << (c.passed() ? "ok" : "VIOLATED") << "\n";
    if (!c.passed())
      std::cout << std::setprecision(17) << "  witness: ell=" << c.witness.ell << " x=" << c.witness.x
                << " s=" << c.witness.s << " theta=" << c.witness.theta << std::setprecision(6) << "\n";
  }
  std::cout << "exact identities checked: " << rep.identities_checked << ", failures: " << rep.identity_failures.size()
            << "\n";
  for (const auto& fail : rep.identity_failures)
    std::cout << "  " << fail.name << " failed at ell=" << fail.ell << " d=" << fail.d << "\n";
  std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return rep.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spheregap: exact certification of even Legendre gap inequalities"};
  app.require_subcommand(1);

  CertifyFlags cf;
  auto* certify = app.add_subcommand("certify", "Certify the gap inequalities over an (ell, d) grid");
  certify->add_option("--inequality", cf.inequality, "improved | original | both")
      ->check(CLI::IsMember({"improved", "original", "both"}));
  certify->add_option("--ell-min", cf.ell_min, "Smallest ell");
  certify->add_option("--ell-max", cf.ell_max, "Largest ell");
  certify->add_option("--dims", cf.dims, "Dimensions: comma list and/or inclusive ranges a..b");
  certify->add_option("--out", cf.out, "Write the report here instead of stdout");
  certify->add_option("--format", cf.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  certify->add_option("--workers", cf.workers, "Worker threads")->check(CLI::PositiveNumber);
  certify->add_flag("--no-certificates", cf.no_certificates, "Omit certificate payloads from JSON");

  EvalFlags ef;
  auto* eval = app.add_subcommand("eval", "Evaluate P_ell by recurrence, integral representation, and trig form");
  eval->add_option("--ell", ef.ell, "Degree")->required();
  eval->add_option("--dim", ef.dim, "Dimension d")->required();
  eval->add_option("--x", ef.xs, "Evaluation point (repeatable)")->take_all();
  eval->add_option("--grid", ef.grid, "Uniform grid of N points on [-1, 1]");
  eval->add_option("--method", ef.method, "recurrence | integral | trig | all")
      ->check(CLI::IsMember({"recurrence", "integral", "trig", "all"}));
  eval->add_option("--quad-n", ef.quad_n, "Quadrature nodes for the integral method");
  eval->add_option("--format", ef.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  SpectralFlags sf;
  auto* spectral = app.add_subcommand("spectral", "Boltzmann eigenvalues, Poincare constant, eigenvalue comparison");
  spectral->add_option("--dim", sf.dim, "Dimension d");
  spectral->add_option("--kernel", sf.kernel, "Kernel JSON, or @file")->required();
  spectral->add_option("--ell-max", sf.ell_max, "Compare even orders up to 2*ell-max");
  spectral->add_option("--quad-n", sf.quad_n, "Quadrature nodes (default 4*ell-max + 64)");
  spectral->add_option("--format", sf.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  ProofFlags pf;
  auto* proof = app.add_subcommand("proofcheck", "Randomized battery over every pointwise step of the gap proof");
  proof->add_option("--samples", pf.samples, "Random draws");
  proof->add_option("--seed", pf.seed, "RNG seed");
  proof->add_option("--ell-max", pf.ell_max, "Largest ell drawn");
  proof->add_option("--dims", pf.dims, "Dimensions for the exact identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kUsage;
  }

  try {
    if (*certify) return cmd_certify(cf);
    if (*eval) return cmd_eval(ef);
    if (*spectral) return cmd_spectral(sf);
    if (*proof) return cmd_proofcheck(pf);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
