#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spheregap/legendre.hpp"
#include "spheregap/polynomial.hpp"
#include "spheregap/rational.hpp"
#include "spheregap/sturm.hpp"

namespace spheregap {

enum class Verdict { certified_nonneg, violated, degenerate_zero };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_nonneg: return "certified_nonneg";
    case Verdict::violated: return "violated";
    case Verdict::degenerate_zero: return "degenerate_zero";
  }
  return "unknown";
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "certified_nonneg") return Verdict::certified_nonneg;
  if (s == "violated") return Verdict::violated;
  if (s == "degenerate_zero") return Verdict::degenerate_zero;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

inline bool is_success(Verdict v) { return v != Verdict::violated; }

// Evidence that a polynomial is >= 0 on [a, b]. Every field can be re-checked with exact
// evaluation and Sturm counts alone; see revalidate().
//
// The root intervals isolate the distinct roots of the square-free part in [a, b]. Between
// consecutive intervals (and between the endpoints and the outermost intervals) the subject
// has no root, hence constant sign, and exactly one sample point records that sign.
struct NonnegCertificate {
  DensePolynomial subject;
  std::pair<BigRational, BigRational> interval;
  DensePolynomial square_free_part;
  int interior_root_count = 0;
  std::vector<RootInterval> root_intervals;
  std::vector<BigRational> sample_points;
  std::vector<int> sample_signs;
  std::pair<BigRational, BigRational> endpoint_values;
  Verdict verdict = Verdict::degenerate_zero;
  std::optional<BigRational> witness;

  friend bool operator==(const NonnegCertificate&, const NonnegCertificate&) = default;
};

inline const BigRational& isolation_width() {
  static const BigRational w = dyadic(16);
  return w;
}

namespace detail {

// One point strictly inside each gap between the isolating intervals and the endpoints.
inline std::vector<BigRational> gap_samples(const std::vector<RootInterval>& roots, const BigRational& a,
                                            const BigRational& b) {
  std::vector<BigRational> samples;
  BigRational left = a;
  for (const auto& r : roots) {
    if (left < r.lo) samples.push_back(midpoint(left, r.lo));
    left = r.hi;
  }
  if (left < b) samples.push_back(midpoint(left, b));
  return samples;
}

}  // namespace detail

inline NonnegCertificate certify_nonneg(const DensePolynomial& p, const BigRational& a, const BigRational& b) {
  if (!(a < b)) throw std::invalid_argument("certify_nonneg requires a < b");
  NonnegCertificate cert;
  cert.subject = p;
  cert.interval = {a, b};
  if (p.is_zero()) {
    cert.verdict = Verdict::degenerate_zero;
    return cert;
  }
  cert.square_free_part = square_free(p);
  const SturmChain chain(cert.square_free_part);
  cert.root_intervals = isolate_roots(chain, a, b, isolation_width());
  for (const auto& r : cert.root_intervals)
    if (!(r.exact() && (r.lo == a || r.lo == b))) ++cert.interior_root_count;
  cert.sample_points = detail::gap_samples(cert.root_intervals, a, b);
  cert.endpoint_values = {p(a), p(b)};

  if (cert.endpoint_values.first.sign() < 0) cert.witness = a;
  for (const auto& x : cert.sample_points) {
    const int s = p(x).sign();
    cert.sample_signs.push_back(s);
    if (s < 0 && !cert.witness) cert.witness = x;
  }
  if (cert.endpoint_values.second.sign() < 0 && !cert.witness) cert.witness = b;
  cert.verdict = cert.witness ? Verdict::violated : Verdict::certified_nonneg;
  return cert;
}

inline NonnegCertificate certify_nonneg_on_unit_interval(const DensePolynomial& p) {
  return certify_nonneg(p, BigRational(-1), BigRational(1));
}

// Adjacent spectral-gap inequality on [-1, 1].
inline NonnegCertificate certify_improved(unsigned ell, Dimension d) {
  return certify_nonneg_on_unit_interval(gap_polynomial(ell, d));
}

// Cumulative inequality on [-1, 1]; ell = 1 is the equality case (degenerate_zero).
inline NonnegCertificate certify_original(unsigned ell, Dimension d) {
  return certify_nonneg_on_unit_interval(prop11_polynomial(ell, d));
}

inline bool telescoping_identity(unsigned ell, Dimension d) {
  if (ell < 1) throw std::invalid_argument("telescoping_identity requires ell >= 1");
  DensePolynomial sum;
  for (unsigned k = 1; k < ell; ++k) sum += gap_polynomial(k, d);
  return prop11_polynomial(ell, d) == sum;
}

struct RevalidationResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Re-checks a certificate from its fields: exact evaluation plus Sturm counts on the recorded
// isolating intervals. No root isolation is performed.
inline RevalidationResult revalidate(const NonnegCertificate& c) {
  auto fail = [](std::string why) { return RevalidationResult{false, std::move(why)}; };
  const auto& [a, b] = c.interval;
  if (!(a < b)) return fail("empty interval");
  if (c.endpoint_values.first != c.subject(a) || c.endpoint_values.second != c.subject(b))
    return fail("endpoint values do not match the subject");

  if (c.subject.is_zero()) {
    if (c.verdict != Verdict::degenerate_zero) return fail("zero subject must be degenerate_zero");
    return {};
  }
  if (c.verdict == Verdict::degenerate_zero) return fail("degenerate_zero on a nonzero subject");
  if (c.square_free_part != square_free(c.subject)) return fail("square-free part mismatch");

  const SturmChain chain(c.square_free_part);
  int total = chain.variations(a) - chain.variations(b) + (chain.leading_sign_at(a) == 0 ? 1 : 0);
  if (total != static_cast<int>(c.root_intervals.size())) return fail("root interval count mismatch");
  int interior = 0;
  const BigRational* prev_hi = nullptr;
  for (const auto& r : c.root_intervals) {
    if (r.lo > r.hi || r.lo < a || r.hi > b) return fail("root interval outside [a, b]");
    if (prev_hi && !(*prev_hi < r.lo)) return fail("root intervals overlap or are unsorted");
    if (r.exact()) {
      if (chain.leading_sign_at(r.lo) != 0) return fail("recorded exact root is not a root");
    } else {
      if (chain.leading_sign_at(r.lo) == 0 || chain.leading_sign_at(r.hi) == 0 ||
          count_roots(chain, r.lo, r.hi) != 1)
        return fail("isolating interval does not hold exactly one root");
    }
    if (!(r.exact() && (r.lo == a || r.lo == b))) ++interior;
    prev_hi = &r.hi;
  }
  if (interior != c.interior_root_count) return fail("interior root count mismatch");

  // Each gap must hold exactly one recorded sample, strictly inside it.
  if (c.sample_points.size() != c.sample_signs.size()) return fail("sample arrays differ in length");
  std::size_t k = 0;
  auto check_gap = [&](const BigRational& lo, const BigRational& hi) -> bool {
    if (!(lo < hi)) return true;
    if (k >= c.sample_points.size()) return false;
    const auto& x = c.sample_points[k];
    if (!(lo < x && x < hi)) return false;
    if (c.subject(x).sign() != c.sample_signs[k]) return false;
    ++k;
    return true;
  };
  BigRational left = a;
  for (const auto& r : c.root_intervals) {
    if (!check_gap(left, r.lo)) return fail("gap sample missing, misplaced or mis-signed");
    left = r.hi;
  }
  if (!check_gap(left, b)) return fail("gap sample missing, misplaced or mis-signed");
  if (k != c.sample_points.size()) return fail("extra sample points");

  bool nonneg = c.endpoint_values.first.sign() >= 0 && c.endpoint_values.second.sign() >= 0;
  for (int s : c.sample_signs) nonneg = nonneg && s >= 0;
  if (nonneg != (c.verdict == Verdict::certified_nonneg)) return fail("verdict inconsistent with signs");
  if (c.verdict == Verdict::violated && (!c.witness || c.subject(*c.witness).sign() >= 0))
    return fail("violated verdict without a negative witness");
  return {};
}

// JSON shape; rationals are "numerator/denominator" strings.
inline nlohmann::json rational_to_json(const BigRational& q) { return q.to_string(); }
inline BigRational rational_from_json(const nlohmann::json& j) { return BigRational::parse(j.get<std::string>()); }

inline nlohmann::json polynomial_to_json(const DensePolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(rational_to_json(c));
  return arr;
}

inline DensePolynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<BigRational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return DensePolynomial(std::move(c));
}

inline nlohmann::json to_json(const NonnegCertificate& c) {
  nlohmann::json j;
  j["subject"] = polynomial_to_json(c.subject);
  j["interval"] = {rational_to_json(c.interval.first), rational_to_json(c.interval.second)};
  j["square_free_part"] = polynomial_to_json(c.square_free_part);
  j["interior_root_count"] = c.interior_root_count;
  auto roots = nlohmann::json::array();
  for (const auto& r : c.root_intervals) roots.push_back({rational_to_json(r.lo), rational_to_json(r.hi)});
  j["root_intervals"] = roots;
  auto samples = nlohmann::json::array();
  for (const auto& x : c.sample_points) samples.push_back(rational_to_json(x));
  j["sample_points"] = samples;
  j["sample_signs"] = c.sample_signs;
  j["endpoint_values"] = {rational_to_json(c.endpoint_values.first), rational_to_json(c.endpoint_values.second)};
  j["verdict"] = to_string(c.verdict);
  j["witness"] = c.witness ? nlohmann::json(rational_to_json(*c.witness)) : nlohmann::json(nullptr);
  return j;
}

inline NonnegCertificate certificate_from_json(const nlohmann::json& j) {
  NonnegCertificate c;
  c.subject = polynomial_from_json(j.at("subject"));
  c.interval = {rational_from_json(j.at("interval").at(0)), rational_from_json(j.at("interval").at(1))};
  c.square_free_part = polynomial_from_json(j.at("square_free_part"));
  c.interior_root_count = j.at("interior_root_count").get<int>();
  for (const auto& r : j.at("root_intervals")) c.root_intervals.push_back({rational_from_json(r.at(0)), rational_from_json(r.at(1))});
  for (const auto& x : j.at("sample_points")) c.sample_points.push_back(rational_from_json(x));
  c.sample_signs = j.at("sample_signs").get<std::vector<int>>();
  c.endpoint_values = {rational_from_json(j.at("endpoint_values").at(0)),
                       rational_from_json(j.at("endpoint_values").at(1))};
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (j.contains("witness") && !j.at("witness").is_null()) c.witness = rational_from_json(j.at("witness"));
  return c;
}

}  // namespace spheregap
