#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "spheregap/certify.hpp"
#include "spheregap/legendre.hpp"
#include "spheregap/quad_eval.hpp"

namespace spheregap {

inline constexpr double pointwise_defect_tolerance = 1e-12;

// Point at which a checker attained its worst value.
struct Witness {
  unsigned ell = 0;
  double x = 0.0;
  double s = 0.0;
  double theta = 0.0;
};

// Worst (smallest) defect seen by one checker; passes iff worst >= threshold.
struct CheckerSummary {
  std::string name;
  double worst = std::numeric_limits<double>::infinity();
  double threshold = -pointwise_defect_tolerance;
  Witness witness;
  std::uint64_t evaluations = 0;

  void observe(double value, const Witness& at) {
    ++evaluations;
    if (value < worst) {
      worst = value;
      witness = at;
    }
  }
  bool passed() const { return worst >= threshold; }
};

struct IdentityFailure {
  std::string name;
  unsigned ell;
  int d;
};

struct ProofBatteryReport {
  std::vector<CheckerSummary> checkers;
  std::uint64_t identities_checked = 0;
  std::vector<IdentityFailure> identity_failures;
  bool passed() const {
    for (const auto& c : checkers)
      if (!c.passed()) return false;
    return identity_failures.empty();
  }
};

struct ProofBatteryOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  unsigned ell_max = 40;
  std::vector<int> dims{2, 3, 4, 5, 6, 7, 8, 9, 10};
};

// Seeded random sweep of every pointwise step of the adjacent-gap proof, plus the exact
// polynomial identities (closing scaling identity, telescoping) for ell <= ell_max.
inline ProofBatteryReport run_proof_battery(const ProofBatteryOptions& opt) {
  enum { kSine, kUnit, kUnitPrime, kUnitAgree, kLemma, kFBound, kReSquare, kModulus, kClosing, kCount };
  ProofBatteryReport rep;
  rep.checkers.resize(kCount);
  rep.checkers[kSine].name = "sine_inequality";
  rep.checkers[kUnit].name = "unit_case";
  rep.checkers[kUnitPrime].name = "unit_case_double_angle";
  rep.checkers[kUnitAgree].name = "unit_case_agreement";
  rep.checkers[kLemma].name = "imaginary_part_lemma";
  rep.checkers[kFBound].name = "f_bound";
  rep.checkers[kReSquare].name = "re_square_identity";
  rep.checkers[kModulus].name = "modulus_identity";
  rep.checkers[kModulus].threshold = -1e-14;
  rep.checkers[kClosing].name = "closing_integral";
  rep.checkers[kClosing].threshold = -1e-10;

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<unsigned> ell_dist(1, std::max(1u, opt.ell_max));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  for (std::uint64_t i = 0; i < opt.samples; ++i) {
    const unsigned ell = ell_dist(rng);
    const double x = unit(rng);
    const double s = unit(rng);
    const double theta = angle(rng);
    const Witness at{ell, x, s, theta};

    rep.checkers[kSine].observe(sine_ineq_check(ell, theta), at);
    const auto unit_case = unit_case_checks(ell, theta);
    rep.checkers[kUnit].observe(unit_case.cosine_form, at);
    rep.checkers[kUnitPrime].observe(unit_case.sine_squared_form, at);
    rep.checkers[kUnitAgree].observe(-std::abs(unit_case.cosine_form - 2.0 * unit_case.sine_squared_form), at);
    rep.checkers[kLemma].observe(lemma22_check(ell, x, s), at);
    const auto fb = F_bound_check(ell, x, s);
    rep.checkers[kFBound].observe(fb.defect, at);
    rep.checkers[kReSquare].observe(-fb.identity_residual, at);

    const double direct = ComplexPoint::from_xs(x, s).norm2();
    const double closed = x * x + s * s * (1.0 - x * x);
    rep.checkers[kModulus].observe(std::min(-std::abs(direct - closed), 1.0 - std::max(direct, closed)), at);
  }

  // Integrating the F bound reproduces ((4l+d)/(d-1))(1-x^2).
  for (int dv : opt.dims) {
    if (dv < 3) continue;
    const Dimension d(dv);
    for (unsigned ell = 1; ell <= std::min(opt.ell_max, 20u); ++ell) {
      for (int k = 0; k <= 20; ++k) {
        const double x = -1.0 + 0.1 * k;
        const double exact = (4.0 * ell + dv) / (dv - 1.0) * (1.0 - x * x);
        const double got = integrated_f_bound(ell, d, x, 8);
        rep.checkers[kClosing].observe(-std::abs(got - exact), Witness{ell, x, 0.0, 0.0});
      }
    }
  }

  for (int dv : opt.dims) {
    const Dimension d(dv);
    DensePolynomial running;
    for (unsigned ell = 1; ell <= opt.ell_max; ++ell) {
      if (!gap_scaling_identity(ell, d)) rep.identity_failures.push_back({"gap_scaling_identity", ell, dv});
      if (prop11_polynomial(ell, d) != running) rep.identity_failures.push_back({"telescoping_identity", ell, dv});
      running += gap_polynomial(ell, d);
      rep.identities_checked += 2;
    }
  }
  return rep;
}

}  // namespace spheregap
