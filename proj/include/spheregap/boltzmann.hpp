#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "spheregap/legendre.hpp"
#include "spheregap/parallel.hpp"
#include "spheregap/quadrature.hpp"

namespace spheregap {

// Malformed or non-admissible collision kernel.
class KernelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConstantKernel {
  double c = 1.0;
};
// b(t) = sum_k coeffs[k] t^k
struct PolynomialKernel {
  std::vector<double> coeffs;
};
// Piecewise-linear through (t, b) samples; constant beyond the first and last sample.
struct TableKernel {
  std::vector<std::pair<double, double>> points;
};
// b(t) = c (1 - t)^{-nu}, singular at grazing t = 1.
struct PowerKernel {
  double c = 1.0;
  double nu = 0.0;
};

// Angular collision kernel b on [-1, 1].
struct KernelSpec {
  std::variant<ConstantKernel, PolynomialKernel, TableKernel, PowerKernel> form;
  bool declared_moment_finite = true;

  double operator()(double t) const {
    return std::visit(
        [t](const auto& k) -> double {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, ConstantKernel>) {
            return k.c;
          } else if constexpr (std::is_same_v<K, PolynomialKernel>) {
            double acc = 0.0;
            for (auto it = k.coeffs.rbegin(); it != k.coeffs.rend(); ++it) acc = acc * t + *it;
            return acc;
          } else if constexpr (std::is_same_v<K, TableKernel>) {
            const auto& p = k.points;
            if (t <= p.front().first) return p.front().second;
            if (t >= p.back().first) return p.back().second;
            auto hi = std::upper_bound(p.begin(), p.end(), t, [](double v, const auto& e) { return v < e.first; });
            auto lo = hi - 1;
            const double w = (t - lo->first) / (hi->first - lo->first);
            return (1.0 - w) * lo->second + w * hi->second;
          } else {
            return k.c * std::pow(1.0 - t, -k.nu);
          }
        },
        form);
  }

  // Same kernel multiplied by s > 0.
  KernelSpec scaled(double s) const {
    KernelSpec out = *this;
    std::visit(
        [s](auto& k) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, PolynomialKernel>) {
            for (auto& c : k.coeffs) c *= s;
          } else if constexpr (std::is_same_v<K, TableKernel>) {
            for (auto& p : k.points) p.second *= s;
          } else {
            k.c *= s;
          }
        },
        out.form);
    return out;
  }

  std::string form_name() const {
    static const char* names[] = {"constant", "poly", "table", "power"};
    return names[form.index()];
  }
};

// Throws KernelError unless the kernel is admissible in dimension d.
inline void validate(const KernelSpec& kernel, Dimension d) {
  if (!kernel.declared_moment_finite)
    throw KernelError("kernel declares an infinite (1 - t^2) moment; not integrable");
  std::visit(
      [d](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantKernel>) {
          if (!(k.c > 0.0)) throw KernelError("constant kernel needs c > 0");
        } else if constexpr (std::is_same_v<K, PolynomialKernel>) {
          if (k.coeffs.empty()) throw KernelError("polynomial kernel needs coefficients");
        } else if constexpr (std::is_same_v<K, TableKernel>) {
          if (k.points.size() < 2) throw KernelError("table kernel needs at least two points");
          for (std::size_t i = 0; i < k.points.size(); ++i) {
            const auto [t, b] = k.points[i];
            if (!(t >= -1.0 && t <= 1.0)) throw KernelError("table kernel abscissae must lie in [-1, 1]");
            if (!(b >= 0.0)) throw KernelError("table kernel values must be >= 0");
            if (i > 0 && !(t > k.points[i - 1].first)) throw KernelError("table kernel abscissae must be strictly increasing");
          }
        } else {
          if (!(k.c > 0.0)) throw KernelError("power kernel needs c > 0");
          const double bound = 0.5 * (d.value() + 1);
          if (!(k.nu < bound))
            throw KernelError("power kernel not integrable: nu = " + std::to_string(k.nu) +
                              " must be < (d+1)/2 = " + std::to_string(bound));
        }
      },
      kernel.form);
}

inline KernelSpec kernel_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw KernelError("kernel must be a JSON object");
    const auto form = j.at("form").get<std::string>();
    KernelSpec k;
    if (form == "constant") {
      k.form = ConstantKernel{j.at("c").get<double>()};
    } else if (form == "poly") {
      k.form = PolynomialKernel{j.at("coeffs").get<std::vector<double>>()};
    } else if (form == "table") {
      TableKernel t;
      for (const auto& p : j.at("points")) t.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
      k.form = std::move(t);
    } else if (form == "power") {
      k.form = PowerKernel{j.at("c").get<double>(), j.at("nu").get<double>()};
    } else {
      throw KernelError("unknown kernel form '" + form + "'");
    }
    if (j.contains("declared_moment_finite")) k.declared_moment_finite = j.at("declared_moment_finite").get<bool>();
    return k;
  } catch (const nlohmann::json::exception& e) {
    throw KernelError(std::string("malformed kernel JSON: ") + e.what());
  }
}

inline KernelSpec kernel_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw KernelError(std::string("malformed kernel JSON: ") + e.what());
  }
  return kernel_from_json(j);
}

inline nlohmann::json to_json(const KernelSpec& kernel) {
  nlohmann::json j;
  j["form"] = kernel.form_name();
  std::visit(
      [&j](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantKernel>) {
          j["c"] = k.c;
        } else if constexpr (std::is_same_v<K, PolynomialKernel>) {
          j["coeffs"] = k.coeffs;
        } else if constexpr (std::is_same_v<K, TableKernel>) {
          auto pts = nlohmann::json::array();
          for (const auto& [t, b] : k.points) pts.push_back({t, b});
          j["points"] = pts;
        } else {
          j["c"] = k.c;
          j["nu"] = k.nu;
        }
      },
      kernel.form);
  if (!kernel.declared_moment_finite) j["declared_moment_finite"] = false;
  return j;
}

// Reference kernels used by the test suites and the acceptance run: smooth, piecewise-linear,
// and grazing-singular representatives (power nu = 1.5 is admissible for every d >= 3).
inline std::vector<std::pair<std::string, KernelSpec>> builtin_kernels() {
  return {
      {"constant", KernelSpec{ConstantKernel{1.0}}},
      {"poly_1_plus_t2", KernelSpec{PolynomialKernel{{1.0, 0.0, 1.0}}}},
      {"poly_1_minus_t2", KernelSpec{PolynomialKernel{{1.0, 0.0, -1.0}}}},
      {"table", KernelSpec{TableKernel{{{-1.0, 0.5}, {-0.25, 1.0}, {0.5, 2.0}, {1.0, 1.25}}}}},
      {"power_0.5", KernelSpec{PowerKernel{1.0, 0.5}}},
      {"power_1.5", KernelSpec{PowerKernel{2.0, 1.5}}},
  };
}

inline unsigned default_spectral_nodes(unsigned ell_max) { return 4 * ell_max + 64; }

namespace detail {

inline double checked(double b) {
  if (!(b >= 0.0)) throw KernelError("kernel takes a negative value on [-1, 1]");
  return b;
}

// Integral over [lo, hi] of g(t) b(t) (1-t)^p (1+t)^q for a piecewise-smooth b, by Gauss–Legendre
// per piece. A piece ending at +-1 is mapped through t = 1 - (1-lo) v^2 (resp. t = -1 + (hi+1) v^2)
// so the endpoint factor becomes v^{2p+1} (resp. v^{2q+1}).
template <class G>
double piece_integral(const KernelSpec& kernel, G&& g, double p, double q, double lo, double hi, unsigned n) {
  const auto& gl = jacobi_rule(n, 0.0, 0.0);
  double sum = 0.0;
  for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
    const double v = 0.5 * (gl.nodes[j] + 1.0);
    const double w = 0.5 * gl.weights[j];
    double t, jac;
    if (hi == 1.0) {
      const double len = 1.0 - lo;
      t = 1.0 - len * v * v;
      jac = std::pow(len, p + 1.0) * 2.0 * std::pow(v, 2.0 * p + 1.0) * std::pow(1.0 + t, q);
    } else if (lo == -1.0) {
      const double len = hi + 1.0;
      t = -1.0 + len * v * v;
      jac = std::pow(len, q + 1.0) * 2.0 * std::pow(v, 2.0 * q + 1.0) * std::pow(1.0 - t, p);
    } else {
      t = lo + (hi - lo) * v;
      jac = (hi - lo) * std::pow(1.0 - t, p) * std::pow(1.0 + t, q);
    }
    sum += w * jac * g(t) * checked(kernel(t));
  }
  return sum;
}

template <class G>
double table_integral(const KernelSpec& kernel, const TableKernel& table, G&& g, double p, double q, unsigned n) {
  std::vector<double> breaks{-1.0, 0.0, 1.0};
  for (const auto& [t, b] : table.points)
    if (t > -1.0 && t < 1.0) breaks.push_back(t);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) sum += piece_integral(kernel, g, p, q, breaks[i], breaks[i + 1], n);
  return sum;
}

// int_{-1}^{1} g(t) b(t) (1-t)^{(d-1)/2} (1+t)^{(d-3)/2} dt. The power kernel's singular factor is
// folded into the Jacobi weight, so g must be smooth.
template <class G>
double weighted_kernel_integral(const KernelSpec& kernel, Dimension d, G&& g, unsigned n) {
  const double p = 0.5 * (d.value() - 1);
  const double q = 0.5 * (d.value() - 3);
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PowerKernel>) {
          return k.c * jacobi_rule(n, p - k.nu, q).integrate(g);
        } else if constexpr (std::is_same_v<K, TableKernel>) {
          return table_integral(kernel, k, g, p, q, n);
        } else {
          return jacobi_rule(n, p, q).integrate([&](double t) { return g(t) * checked(kernel(t)); });
        }
      },
      kernel.form);
}

}  // namespace detail

// lambda~_ell = omega_{d-2} int (1 - P_ell(t)) b(t) (1-t^2)^{(d-3)/2} dt, the zonal reduction of
// the eigenvalue of -B_b on order-ell harmonics. 1 - P_ell is written as (1-t) q_ell(t).
inline double boltzmann_eigenvalue(unsigned ell, Dimension d, const KernelSpec& kernel, unsigned n) {
  validate(kernel, d);
  if (ell == 0) return 0.0;
  const double integral =
      detail::weighted_kernel_integral(kernel, d, [&](double t) { return legendre_defect_quotient(ell, d, t); }, n);
  return omega(d.value() - 2) * integral;
}

// int (1 - (e.sigma)^2) b(e.sigma) dsigma = omega_{d-2} int (1-t^2)^{(d-1)/2} b(t) dt.
// Evaluated along a route independent of boltzmann_eigenvalue: closed forms where they exist,
// otherwise a symmetric Gauss–Jacobi rule or the piecewise quadrature.
inline double collision_moment(Dimension d, const KernelSpec& kernel, unsigned n) {
  validate(kernel, d);
  const double a = 0.5 * (d.value() - 1);
  const double integral = std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantKernel>) {
          return k.c * symmetric_mass(a);
        } else if constexpr (std::is_same_v<K, PowerKernel>) {
          return k.c * jacobi_mass(a - k.nu, a);
        } else if constexpr (std::is_same_v<K, TableKernel>) {
          return detail::table_integral(kernel, k, [](double) { return 1.0; }, a, a, n);
        } else {
          return jacobi_rule(n, a, a).integrate([&](double t) { return detail::checked(kernel(t)); });
        }
      },
      kernel.form);
  return omega(d.value() - 2) * integral;
}

inline constexpr double poincare_agreement_tolerance = 1e-9;

struct PoincareEstimate {
  double from_moment = 0.0;      // (d-1) / int (1 - (e.sigma)^2) b dsigma
  double from_eigenvalue = 0.0;  // (1/2) lambda_2 / lambda~_2
  double relative_difference() const { return std::abs(from_moment - from_eigenvalue) / std::abs(from_moment); }
  bool agree(double tol = poincare_agreement_tolerance) const { return relative_difference() <= tol; }
};

inline PoincareEstimate poincare_estimates(Dimension d, const KernelSpec& kernel, unsigned n) {
  PoincareEstimate est;
  est.from_moment = (d.value() - 1) / collision_moment(d, kernel, n);
  est.from_eigenvalue = 0.5 * static_cast<double>(eigenvalue(2, d).value) / boltzmann_eigenvalue(2, d, kernel, n);
  return est;
}

// C_P(d, b). Throws std::runtime_error when the two closed expressions disagree beyond tolerance,
// which means the quadrature did not resolve the kernel.
inline double poincare_constant(Dimension d, const KernelSpec& kernel, unsigned n) {
  const auto est = poincare_estimates(d, kernel, n);
  if (!est.agree())
    throw std::runtime_error("Poincare constant formulas disagree: " + std::to_string(est.from_moment) + " vs " +
                             std::to_string(est.from_eigenvalue));
  return est.from_moment;
}

struct SpectralResult {
  Dimension d{3};
  KernelSpec kernel;
  std::map<unsigned, double> tilde_lambda;
  PoincareEstimate poincare;
  // lambda~_2/lambda_2 - lambda~_{2l}/lambda_{2l}
  std::map<unsigned, double> comparison_margins;

  double poincare_constant() const { return poincare.from_moment; }
  // Margins are judged relative to lambda~_2 / lambda_2 so the test is invariant under kernel scaling.
  bool margins_ok(double tol = 1e-9) const {
    const double scale = tilde_lambda.at(2) / static_cast<double>(eigenvalue(2, d).value);
    return std::all_of(comparison_margins.begin(), comparison_margins.end(),
                       [&](const auto& m) { return m.second >= -tol * scale; });
  }
};

inline SpectralResult verify_eigencomp(Dimension d, const KernelSpec& kernel, unsigned ell_max, unsigned n,
                                       unsigned workers = default_workers()) {
  if (ell_max < 1) throw std::invalid_argument("verify_eigencomp needs ell_max >= 1");
  validate(kernel, d);
  SpectralResult out{d, kernel, {}, {}, {}};
  std::vector<double> values(2 * ell_max + 1);
  parallel_for(values.size(), [&](std::size_t ell) { values[ell] = boltzmann_eigenvalue(ell, d, kernel, n); }, workers);
  for (unsigned ell = 0; ell < values.size(); ++ell) out.tilde_lambda[ell] = values[ell];
  out.poincare = poincare_estimates(d, kernel, n);
  const double base = values[2] / static_cast<double>(eigenvalue(2, d).value);
  for (unsigned ell = 1; ell <= ell_max; ++ell)
    out.comparison_margins[ell] = base - values[2 * ell] / static_cast<double>(eigenvalue(2 * ell, d).value);
  return out;
}

}  // namespace spheregap
