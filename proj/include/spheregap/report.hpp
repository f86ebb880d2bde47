#pragma once

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spheregap/certify.hpp"
#include "spheregap/parallel.hpp"

namespace spheregap {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr const char* report_schema = "spheregap/1";

enum class Inequality { improved, original };

inline std::string to_string(Inequality q) { return q == Inequality::improved ? "improved" : "original"; }

// Parses "a..b" (inclusive), "a", or comma lists of either.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  auto to_int = [](std::string_view s) {
    std::size_t used = 0;
    const std::string str(s);
    int v = 0;
    try {
      v = std::stoi(str, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (str.empty() || used != str.size()) throw std::invalid_argument("invalid integer '" + str + "'");
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(to_int(item));
    } else {
      const int lo = to_int(item.substr(0, dots));
      const int hi = to_int(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("empty range '" + std::string(item) + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<int> parse_dims(std::string_view text) {
  auto dims = parse_int_list(text);
  for (int d : dims)
    if (d < 2) throw std::invalid_argument("dimension must be ≥ 2");
  return dims;
}

struct CertifyRow {
  unsigned ell = 0;
  int d = 0;
  Inequality inequality = Inequality::improved;
  NonnegCertificate certificate;
  double timing_ms = 0.0;

  bool passed() const { return is_success(certificate.verdict); }
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SweepReport {
  std::string tool_version = spheregap::tool_version;
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CertifyRow> rows;

  SweepSummary summary() const {
    SweepSummary s;
    s.total = rows.size();
    for (const auto& r : rows) (r.passed() ? s.passed : s.failed)++;
    return s;
  }
};

struct CertifySweep {
  std::vector<Inequality> inequalities{Inequality::improved};
  unsigned ell_min = 1;
  unsigned ell_max = 10;
  std::vector<int> dims{2, 3, 4, 5};
  unsigned workers = default_workers();
};

// Rows come out ordered by (inequality, ell, d) whatever order the workers finish in.
inline SweepReport run_certify_sweep(const CertifySweep& sweep) {
  if (sweep.ell_min < 1 || sweep.ell_max < sweep.ell_min) throw std::invalid_argument("need 1 <= ell-min <= ell-max");
  SweepReport rep;
  rep.command = "certify";
  auto ineqs = nlohmann::json::array();
  for (auto q : sweep.inequalities) ineqs.push_back(to_string(q));
  rep.parameters = {{"inequalities", ineqs}, {"ell_min", sweep.ell_min}, {"ell_max", sweep.ell_max}, {"dims", sweep.dims}};
  for (auto q : sweep.inequalities)
    for (unsigned ell = sweep.ell_min; ell <= sweep.ell_max; ++ell)
      for (int d : sweep.dims) rep.rows.push_back({ell, d, q, {}, 0.0});
  parallel_for(
      rep.rows.size(),
      [&](std::size_t i) {
        auto& row = rep.rows[i];
        const auto t0 = std::chrono::steady_clock::now();
        row.certificate = row.inequality == Inequality::improved ? certify_improved(row.ell, Dimension(row.d))
                                                                 : certify_original(row.ell, Dimension(row.d));
        row.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      },
      sweep.workers);
  return rep;
}

inline nlohmann::json row_fields(const CertifyRow& r) {
  return {{"ell", r.ell},
          {"d", r.d},
          {"inequality", to_string(r.inequality)},
          {"verdict", to_string(r.certificate.verdict)},
          {"interior_root_count", r.certificate.interior_root_count},
          {"timing_ms", r.timing_ms}};
}

inline nlohmann::json to_json(const SweepReport& rep, bool with_certificates = true) {
  nlohmann::json j;
  j["schema"] = report_schema;
  j["tool_version"] = rep.tool_version;
  j["command"] = rep.command;
  j["parameters"] = rep.parameters;
  auto rows = nlohmann::json::array();
  for (const auto& r : rep.rows) {
    auto row = row_fields(r);
    if (with_certificates) row["certificate"] = to_json(r.certificate);
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;
  const auto s = rep.summary();
  j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
  return j;
}

inline std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

inline std::string to_csv(const SweepReport& rep) {
  std::ostringstream os;
  os << "ell,d,inequality,verdict,interior_root_count,timing_ms\n";
  for (const auto& r : rep.rows)
    os << r.ell << ',' << r.d << ',' << to_string(r.inequality) << ',' << to_string(r.certificate.verdict) << ','
       << r.certificate.interior_root_count << ',' << format_ms(r.timing_ms) << '\n';
  return os.str();
}

inline std::string to_text(const SweepReport& rep) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "inequality" << std::right << std::setw(5) << "ell" << std::setw(5) << "d"
     << "  " << std::left << std::setw(18) << "verdict" << std::right << std::setw(7) << "roots" << std::setw(12)
     << "ms" << '\n';
  for (const auto& r : rep.rows)
    os << std::left << std::setw(10) << to_string(r.inequality) << std::right << std::setw(5) << r.ell << std::setw(5)
       << r.d << "  " << std::left << std::setw(18) << to_string(r.certificate.verdict) << std::right << std::setw(7)
       << r.certificate.interior_root_count << std::setw(12) << format_ms(r.timing_ms) << '\n';
  const auto s = rep.summary();
  os << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << '\n';
  return os.str();
}

}  // namespace spheregap
