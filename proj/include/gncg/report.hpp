#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gncg {

/// Where a verification case lives: group descriptor, subgroup (by members),
/// and the name of g.
struct CaseRef {
  std::string group;
  std::string subgroup;
  std::string g;
};

struct Failure {
  CaseRef where;
  std::string claim;     // claim identifier, e.g. "thm-3.6b-gne1"
  std::string expected;
  std::string observed;
};

struct Skip {
  CaseRef where;
  std::string reason;
};

/// Per-suite machine-readable outcome. cases_checked counts only cases that
/// met the suite's hypotheses and were asserted on; everything filtered out
/// lands in the skip tally. A suite that checked nothing is WARN, never PASS.
struct VerificationReport {
  std::string suite;
  std::string theorem_id;
  long cases_checked = 0;
  std::vector<Failure> failures;
  std::vector<Skip> skipped;     // capped listing; skipped_total holds the full count
  long skipped_total = 0;
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;

  static constexpr std::size_t kMaxListedSkips = 200;

  enum class Status { Pass, Warn, Fail };

  Status status() const {
    if (!failures.empty()) return Status::Fail;
    if (cases_checked == 0) return Status::Warn;
    return Status::Pass;
  }

  void skip(CaseRef where, std::string reason) {
    ++skipped_total;
    if (skipped.size() < kMaxListedSkips) skipped.push_back(Skip{std::move(where), std::move(reason)});
  }

  void fail(CaseRef where, std::string claim, std::string expected, std::string observed) {
    failures.push_back(Failure{std::move(where), std::move(claim), std::move(expected), std::move(observed)});
  }
};

inline std::string_view to_string(VerificationReport::Status s) {
  switch (s) {
    case VerificationReport::Status::Pass: return "PASS";
    case VerificationReport::Status::Warn: return "WARN";
    case VerificationReport::Status::Fail: return "FAIL";
  }
  return "?";
}

inline nlohmann::json to_json(const CaseRef& c) {
  return nlohmann::json{{"group", c.group}, {"subgroup", c.subgroup}, {"g", c.g}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : r.failures)
    failures.push_back(nlohmann::json{{"case", to_json(f.where)},
                                      {"claim", f.claim},
                                      {"expected", f.expected},
                                      {"observed", f.observed}});
  nlohmann::json skipped = nlohmann::json::array();
  for (const Skip& s : r.skipped)
    skipped.push_back(nlohmann::json{{"case", to_json(s.where)}, {"reason", s.reason}});
  return nlohmann::json{{"suite", r.suite},
                        {"theorem_id", r.theorem_id},
                        {"status", std::string(to_string(r.status()))},
                        {"cases_checked", r.cases_checked},
                        {"failures", failures},
                        {"skipped", skipped},
                        {"skipped_total", r.skipped_total},
                        {"notes", r.notes},
                        {"elapsed_ms", r.elapsed_ms}};
}

/// Versioned wrapper around a batch of reports.
inline nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return nlohmann::json{{"schema", 1}, {"reports", arr}};
}

}  // namespace gncg
