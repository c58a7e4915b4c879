#ifndef HYPERSEQ_IDENTITIES_ENGINE_HPP
#define HYPERSEQ_IDENTITIES_ENGINE_HPP

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hyperseq/identities/registry.hpp"
#include "hyperseq/identities/report.hpp"

namespace hyperseq {

struct AuditOptions {
  std::size_t counterexample_cap = 5;
  unsigned workers = 0;  // 0: hardware concurrency
  std::optional<double> float_tolerance;  // replaces the registered tolerance of FLOAT identities
};

namespace detail {

enum class Outcome { Pass, Fail, Skip };

struct PointResult {
  Outcome outcome = Outcome::Pass;
  std::optional<SequenceValue> lhs, rhs;
  std::string reason;
};

inline PointResult evaluate_point(const Reading& reading, const Mode& mode, const Assignment& a) {
  PointResult r;
  try {
    SequenceValue l = reading.lhs(a);
    SequenceValue rv = reading.rhs(a);
    if (!values_agree(l, rv, mode)) {
      r.outcome = Outcome::Fail;
      r.lhs = std::move(l);
      r.rhs = std::move(rv);
    }
  } catch (const DomainError& e) {
    r = {Outcome::Skip, {}, {}, std::string("domain: ") + e.what()};
  } catch (const ConstructionError& e) {
    r = {Outcome::Skip, {}, {}, std::string("construction: ") + e.what()};
  } catch (const ConvergenceError& e) {
    r = {Outcome::Skip, {}, {}, std::string("convergence: ") + e.what()};
  }
  return r;
}

inline unsigned worker_count(const AuditOptions& opts, std::size_t points) {
  unsigned w = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  if (points < 64) return 1;
  return static_cast<unsigned>(std::min<std::size_t>(w, points / 16));
}

/// Evaluates one reading at every point. Work is split into contiguous chunks;
/// results land in a per-point slot, so the merge below is order-independent.
inline ReadingReport run_reading(const Reading& reading, const Mode& mode, const std::vector<Assignment>& points,
                                 const AuditOptions& opts) {
  std::vector<PointResult> results(points.size());
  unsigned workers = worker_count(opts, points.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) results[i] = evaluate_point(reading, mode, points[i]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::size_t chunk = (points.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          std::size_t end = std::min(points.size(), (w + 1) * chunk);
          for (std::size_t i = w * chunk; i < end; ++i) results[i] = evaluate_point(reading, mode, points[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  ReadingReport rep;
  rep.reading = reading.name;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto& r = results[i];
    switch (r.outcome) {
      case Outcome::Pass: ++rep.tested; break;
      case Outcome::Fail:
        ++rep.tested;
        ++rep.failed;
        if (rep.counterexamples.size() < opts.counterexample_cap)
          rep.counterexamples.push_back({points[i], std::move(*r.lhs), std::move(*r.rhs)});
        break;
      case Outcome::Skip:
        ++rep.skipped;
        if (rep.skips.size() < opts.counterexample_cap) rep.skips.push_back({points[i], std::move(r.reason)});
        break;
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace detail

/// Checks every reading of `identity` over its (possibly overridden) domain.
inline IdentityReport verify(const Identity& identity, const DomainBounds& bounds = {}, const AuditOptions& opts = {}) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Assignment> points = enumerate(identity.domain, bounds);
  Mode mode = identity.mode;
  if (mode.kind == ModeKind::Float && opts.float_tolerance) mode.tolerance = *opts.float_tolerance;
  IdentityReport rep;
  rep.identity_id = identity.id;
  rep.suite = identity.suite;
  rep.anchor = identity.anchor;
  rep.mode = mode;
  rep.primary = detail::run_reading(identity.primary, mode, points, opts);
  for (const auto& alt : identity.alternatives) rep.alternatives.push_back(detail::run_reading(alt, mode, points, opts));
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline IdentityReport verify(std::string_view id, const DomainBounds& bounds = {}, const AuditOptions& opts = {}) {
  return verify(find_identity(id), bounds, opts);
}

/// `only` entries match a full id or its row suffix ("3.95" matches "t1-3.95").
inline bool id_matches(const std::string& id, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& o : only) {
    if (id == o) return true;
    std::string suffix = "-" + o;
    if (id.size() > suffix.size() && id.compare(id.size() - suffix.size(), suffix.size(), suffix) == 0) return true;
  }
  return false;
}

/// Runs every identity whose suite is in `suites` (all when empty), ordered by id.
inline AuditReport run_suite(const std::vector<std::string>& suites, const DomainBounds& bounds = {},
                             const AuditOptions& opts = {}, const std::vector<std::string>& only = {}) {
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw LookupError("unknown suite '" + s + "'");
  std::set<std::string> wanted(suites.begin(), suites.end());
  std::vector<const Identity*> selected;
  for (const auto& e : registry())
    if ((wanted.empty() || wanted.count(e.suite)) && id_matches(e.id, only)) selected.push_back(&e);
  std::sort(selected.begin(), selected.end(), [](const Identity* a, const Identity* b) { return a->id < b->id; });

  AuditReport report;
  report.suites = suites;
  for (const Identity* e : selected) report.identities.push_back(verify(*e, bounds, opts));
  return report;
}

}  // namespace hyperseq

#endif  // HYPERSEQ_IDENTITIES_ENGINE_HPP
