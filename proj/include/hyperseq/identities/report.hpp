#ifndef HYPERSEQ_IDENTITIES_REPORT_HPP
#define HYPERSEQ_IDENTITIES_REPORT_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperseq/identities/types.hpp"

namespace hyperseq {

enum class Verdict { Pass, Fail, Skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

struct Counterexample {
  Assignment params;
  SequenceValue lhs;
  SequenceValue rhs;
};

struct SkipRecord {
  Assignment params;
  std::string reason;
};

/// Outcome of one reading over the whole domain.
struct ReadingReport {
  std::string reading;
  Verdict verdict = Verdict::Skipped;
  long tested = 0;
  long skipped = 0;
  long failed = 0;
  std::vector<Counterexample> counterexamples;  // first `cap` failures, in domain order
  std::vector<SkipRecord> skips;                // first `cap` skip reasons

  void finalize() {
    verdict = failed > 0 ? Verdict::Fail : (tested > 0 ? Verdict::Pass : Verdict::Skipped);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["reading"] = reading;
    j["verdict"] = to_string(verdict);
    j["tested"] = tested;
    j["skipped"] = skipped;
    j["failed"] = failed;
    auto& ce = j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& c : counterexamples)
      ce.push_back({{"params", c.params.to_json()}, {"lhs", value_json(c.lhs)}, {"rhs", value_json(c.rhs)}});
    auto& sk = j["skip_reasons"] = nlohmann::ordered_json::array();
    for (const auto& s : skips) sk.push_back({{"params", s.params.to_json()}, {"reason", s.reason}});
    return j;
  }
};

struct IdentityReport {
  std::string identity_id;
  std::string suite;
  std::string anchor;
  Mode mode;
  ReadingReport primary;
  std::vector<ReadingReport> alternatives;
  double elapsed_seconds = 0.0;

  Verdict verdict() const { return primary.verdict; }

  const ReadingReport* reading(std::string_view name) const {
    if (primary.reading == name) return &primary;
    for (const auto& r : alternatives)
      if (r.reading == name) return &r;
    return nullptr;
  }

  // Timing is left out so that repeated runs serialise byte-identically.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["identity_id"] = identity_id;
    j["suite"] = suite;
    j["anchor"] = anchor;
    j["mode"] = mode.str();
    if (mode.kind == ModeKind::Float) j["tolerance"] = mode.tolerance;
    j["verdict"] = to_string(primary.verdict);
    j["tested"] = primary.tested;
    j["skipped"] = primary.skipped;
    nlohmann::ordered_json p = primary.to_json();
    j["reading"] = primary.reading;
    j["failed"] = primary.failed;
    j["counterexamples"] = p["counterexamples"];
    j["skip_reasons"] = p["skip_reasons"];
    auto& alt = j["alternatives"] = nlohmann::ordered_json::array();
    for (const auto& r : alternatives) alt.push_back(r.to_json());
    return j;
  }
};

struct AuditSummary {
  long total = 0, pass = 0, fail = 0, skipped = 0;
};

struct AuditReport {
  std::vector<std::string> suites;  // empty means every suite
  std::vector<IdentityReport> identities;

  AuditSummary summary() const {
    AuditSummary s;
    for (const auto& r : identities) {
      ++s.total;
      switch (r.verdict()) {
        case Verdict::Pass: ++s.pass; break;
        case Verdict::Fail: ++s.fail; break;
        case Verdict::Skipped: ++s.skipped; break;
      }
    }
    return s;
  }

  bool has_failures() const { return summary().fail > 0; }

  const IdentityReport* find(std::string_view id) const {
    for (const auto& r : identities)
      if (r.identity_id == id) return &r;
    return nullptr;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suites"] = suites;
    AuditSummary s = summary();
    j["summary"] = {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
    auto& ids = j["identities"] = nlohmann::ordered_json::array();
    for (const auto& r : identities) ids.push_back(r.to_json());
    return j;
  }

  std::string to_csv() const {
    std::ostringstream out;
    out << "identity_id,suite,mode,verdict,tested,skipped,failed,first_counterexample,alternatives\n";
    for (const auto& r : identities) {
      std::string first;
      if (!r.primary.counterexamples.empty()) {
        const auto& c = r.primary.counterexamples.front();
        first = c.params.str() + ": lhs=" + render(c.lhs) + " rhs=" + render(c.rhs);
      }
      std::string alts;
      for (const auto& a : r.alternatives) {
        if (!alts.empty()) alts += "; ";
        alts += a.reading + "=" + std::string(to_string(a.verdict));
      }
      out << r.identity_id << ',' << r.suite << ',' << r.mode.str() << ',' << to_string(r.verdict()) << ','
          << r.primary.tested << ',' << r.primary.skipped << ',' << r.primary.failed << ',' << csv_quote(first) << ','
          << csv_quote(alts) << '\n';
    }
    return out.str();
  }

  std::string to_text() const {
    std::ostringstream out;
    for (const auto& r : identities) {
      out << to_string(r.verdict()) << ' ' << r.identity_id << " tested=" << r.primary.tested
          << " skipped=" << r.primary.skipped;
      if (r.primary.failed > 0) out << " failed=" << r.primary.failed;
      out << '\n';
      for (const auto& c : r.primary.counterexamples)
        out << "    " << c.params.str() << ": lhs=" << render(c.lhs) << " rhs=" << render(c.rhs) << '\n';
      for (const auto& a : r.alternatives)
        out << "    reading " << a.reading << ": " << to_string(a.verdict) << " tested=" << a.tested
            << " skipped=" << a.skipped << '\n';
    }
    AuditSummary s = summary();
    out << s.total << " identities: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
    return out.str();
  }

 private:
  static std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string q = "\"";
    for (char ch : field) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + '"';
  }
};

}  // namespace hyperseq

#endif  // HYPERSEQ_IDENTITIES_REPORT_HPP
