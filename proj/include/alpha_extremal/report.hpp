#ifndef ALPHA_EXTREMAL_REPORT_HPP
#define ALPHA_EXTREMAL_REPORT_HPP

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

namespace alpha_extremal {

enum class Status { kPass, kFail, kSkipped, kSkippedOutOfHypothesis };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
    case Status::kSkippedOutOfHypothesis: return "skipped-out-of-hypothesis";
  }
  return "?";
}

inline Status parse_status(const std::string& s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "skipped") return Status::kSkipped;
  if (s == "skipped-out-of-hypothesis") return Status::kSkippedOutOfHypothesis;
  throw std::invalid_argument("unknown status '" + s + "'");
}

/// One verified (claim, n, parameter, alpha) cell.
///
/// For theorem records the winner is the argmax of rho over the class and the
/// runner-up the best non-isomorphic member. Lemma records aggregate every
/// instance of one order: margin is the smallest slack seen and the key names
/// the instance that attained it. Unset optionals serialize as null.
struct VerificationReport {
  std::string theorem_id;
  int n = 0;
  int parameter = 0;
  double alpha = 0.0;
  std::string winner_canonical_key;
  bool winner_matches_family = false;
  std::optional<double> rho_winner;
  std::optional<double> rho_runner_up;
  std::optional<double> margin;
  int class_size = 0;
  Status status = Status::kSkipped;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline bool report_order(const VerificationReport& a, const VerificationReport& b) {
  return std::tie(a.theorem_id, a.n, a.parameter, a.alpha) < std::tie(b.theorem_id, b.n, b.parameter, b.alpha);
}

inline void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), report_order);
}

inline bool any_failed(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::kFail; });
}

namespace detail {

inline nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline std::optional<double> optional_double(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_number(const std::optional<double>& v) { return v ? csv_number(*v) : std::string(); }

}  // namespace detail

inline nlohmann::json to_json(const VerificationReport& r) {
  return nlohmann::json{
      {"theorem_id", r.theorem_id},
      {"n", r.n},
      {"parameter", r.parameter},
      {"alpha", r.alpha},
      {"winner_canonical_key", r.winner_canonical_key},
      {"winner_matches_family", r.winner_matches_family},
      {"rho_winner", detail::optional_json(r.rho_winner)},
      {"rho_runner_up", detail::optional_json(r.rho_runner_up)},
      {"margin", detail::optional_json(r.margin)},
      {"class_size", r.class_size},
      {"status", to_string(r.status)},
  };
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.theorem_id = j.at("theorem_id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.parameter = j.at("parameter").get<int>();
  r.alpha = j.at("alpha").get<double>();
  r.winner_canonical_key = j.at("winner_canonical_key").get<std::string>();
  r.winner_matches_family = j.at("winner_matches_family").get<bool>();
  r.rho_winner = detail::optional_double(j.at("rho_winner"));
  r.rho_runner_up = detail::optional_double(j.at("rho_runner_up"));
  r.margin = detail::optional_double(j.at("margin"));
  r.class_size = j.at("class_size").get<int>();
  r.status = parse_status(j.at("status").get<std::string>());
  return r;
}

inline std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2);
}

inline std::vector<VerificationReport> reports_from_json(const std::string& text) {
  std::vector<VerificationReport> out;
  for (const auto& j : nlohmann::json::parse(text)) out.push_back(report_from_json(j));
  return out;
}

inline constexpr const char* kCsvHeader =
    "theorem_id,n,parameter,alpha,winner_canonical_key,winner_matches_family,rho_winner,rho_runner_up,margin,"
    "class_size,status";

inline std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = std::string(kCsvHeader) + "\r\n";
  for (const auto& r : reports) {
    out += detail::csv_field(r.theorem_id) + ',' + std::to_string(r.n) + ',' + std::to_string(r.parameter) + ',' +
           detail::csv_number(r.alpha) + ',' + detail::csv_field(r.winner_canonical_key) + ',' +
           (r.winner_matches_family ? "true" : "false") + ',' + detail::csv_number(r.rho_winner) + ',' +
           detail::csv_number(r.rho_runner_up) + ',' + detail::csv_number(r.margin) + ',' +
           std::to_string(r.class_size) + ',' + to_string(r.status) + "\r\n";
  }
  return out;
}

enum class ReportFormat { kJson, kCsv };

inline void report_write(const std::vector<VerificationReport>& reports, const std::string& path, ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file " + path);
  out << (format == ReportFormat::kJson ? reports_to_json(reports) + "\n" : reports_to_csv(reports));
  out.flush();
  if (!out) throw std::runtime_error("failed writing report file " + path);
}

}  // namespace alpha_extremal

#endif  // ALPHA_EXTREMAL_REPORT_HPP
