#ifndef HYPERSEQ_IDENTITIES_TYPES_HPP
#define HYPERSEQ_IDENTITIES_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyperseq/analytic.hpp"
#include "hyperseq/errors.hpp"
#include "hyperseq/exactnum.hpp"

namespace hyperseq {

/// A value produced by an identity side: exact, or float with an error bound.
using SequenceValue = std::variant<ExactRational, CertifiedReal>;

inline nlohmann::ordered_json value_json(const SequenceValue& v) {
  if (const auto* q = std::get_if<ExactRational>(&v)) return q->str();
  const auto& c = std::get<CertifiedReal>(v);
  return {{"value", c.value}, {"abs_error_bound", c.abs_error_bound}};
}

inline std::string render(const SequenceValue& v) {
  if (const auto* q = std::get_if<ExactRational>(&v)) return q->str();
  const auto& c = std::get<CertifiedReal>(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g +/- %.3g", c.value, c.abs_error_bound);
  return buf;
}

inline CertifiedReal as_certified(const SequenceValue& v) {
  if (const auto* q = std::get_if<ExactRational>(&v)) return to_certified(*q);
  return std::get<CertifiedReal>(v);
}

/// Named parameter values in declaration order.
class Assignment {
 public:
  void set(std::string name, ExactRational value) {
    for (auto& [k, v] : values_)
      if (k == name) {
        v = std::move(value);
        return;
      }
    values_.emplace_back(std::move(name), std::move(value));
  }

  bool has(std::string_view name) const {
    return std::any_of(values_.begin(), values_.end(), [&](const auto& kv) { return kv.first == name; });
  }

  const ExactRational& q(std::string_view name) const {
    for (const auto& [k, v] : values_)
      if (k == name) return v;
    throw LookupError("assignment has no parameter '" + std::string(name) + "'");
  }

  long i(std::string_view name) const { return q(name).to_long(); }

  const std::vector<std::pair<std::string, ExactRational>>& values() const { return values_; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : values_) j[k] = v.str();
    return j;
  }

  std::string str() const {
    std::string s;
    for (const auto& [k, v] : values_) {
      if (!s.empty()) s += ", ";
      s += k + "=" + v.str();
    }
    return s;
  }

 private:
  std::vector<std::pair<std::string, ExactRational>> values_;
};

/// The fixed rational sample list used for free real parameters.
inline const std::vector<ExactRational>& sample_points() {
  static const std::vector<ExactRational> points = {0, 1, ExactRational::make(1, 2), ExactRational::make(-1, 3),
                                                    ExactRational::make(5, 2), 3};
  return points;
}

enum class ParamKind { Range, Fixed, Samples };

struct ParamDecl {
  std::string name;
  ParamKind kind = ParamKind::Range;
  long lo = 0;
  long hi = 0;
  std::vector<ExactRational> samples;

  static ParamDecl range(std::string name, long lo, long hi) { return {std::move(name), ParamKind::Range, lo, hi, {}}; }
  static ParamDecl fixed(std::string name, long value) { return {std::move(name), ParamKind::Fixed, value, value, {}}; }
  static ParamDecl sampled(std::string name, std::vector<ExactRational> points = sample_points()) {
    return {std::move(name), ParamKind::Samples, 0, 0, std::move(points)};
  }
};

/// Upper-bound overrides for integer parameters. A per-name bound beats the
/// global one; ranges that start below zero are clipped symmetrically.
struct DomainBounds {
  std::optional<long> max_all;
  std::map<std::string, long> per_param;

  std::pair<long, long> effective(const ParamDecl& p) const {
    std::optional<long> bound;
    if (auto it = per_param.find(p.name); it != per_param.end()) bound = it->second;
    else if (max_all) bound = max_all;
    if (!bound) return {p.lo, p.hi};
    long lo = p.lo < 0 ? std::max(p.lo, -*bound) : p.lo;
    return {lo, *bound};
  }
};

using Constraint = std::function<bool(const Assignment&)>;

/// One rectangular family of assignments, optionally filtered.
struct Branch {
  std::vector<ParamDecl> params;
  Constraint constraint;
};

/// All assignments of every branch, in lexicographic declaration order.
inline std::vector<Assignment> enumerate(const std::vector<Branch>& branches, const DomainBounds& bounds) {
  std::vector<Assignment> out;
  for (const auto& branch : branches) {
    std::vector<std::vector<ExactRational>> axes;
    for (const auto& p : branch.params) {
      std::vector<ExactRational> axis;
      if (p.kind == ParamKind::Samples) {
        axis = p.samples;
      } else if (p.kind == ParamKind::Fixed) {
        axis.emplace_back(p.lo);
      } else {
        auto [lo, hi] = bounds.effective(p);
        for (long v = lo; v <= hi; ++v) axis.emplace_back(v);
      }
      axes.push_back(std::move(axis));
    }
    if (std::any_of(axes.begin(), axes.end(), [](const auto& a) { return a.empty(); })) continue;
    std::vector<std::size_t> idx(axes.size(), 0);
    for (bool done = false; !done;) {
      Assignment a;
      for (std::size_t d = 0; d < axes.size(); ++d) a.set(branch.params[d].name, axes[d][idx[d]]);
      if (!branch.constraint || branch.constraint(a)) out.push_back(std::move(a));
      done = true;
      for (std::size_t d = axes.size(); d-- > 0;) {
        if (++idx[d] < axes[d].size()) {
          done = false;
          break;
        }
        idx[d] = 0;
      }
    }
  }
  return out;
}

using Evaluator = std::function<SequenceValue(const Assignment&)>;

/// A concrete interpretation of a claim: how to evaluate each side.
struct Reading {
  std::string name;
  Evaluator lhs;
  Evaluator rhs;
};

enum class ModeKind { Exact, Float };

struct Mode {
  ModeKind kind = ModeKind::Exact;
  double tolerance = 0.0;

  static Mode exact() { return {}; }
  static Mode floating(double tol) { return {ModeKind::Float, tol}; }
  std::string str() const { return kind == ModeKind::Exact ? "EXACT" : "FLOAT"; }
};

/// Exact mode demands rational equality. Float mode accepts
/// |a - b| <= tol * max(1, |a|, |b|) + err(a) + err(b).
inline bool values_agree(const SequenceValue& a, const SequenceValue& b, const Mode& mode) {
  if (mode.kind == ModeKind::Exact) {
    const auto* x = std::get_if<ExactRational>(&a);
    const auto* y = std::get_if<ExactRational>(&b);
    if (!x || !y) throw IntegrityError("exact identity produced a floating-point value");
    return *x == *y;
  }
  CertifiedReal x = as_certified(a), y = as_certified(b);
  double scale = std::max({1.0, std::fabs(x.value), std::fabs(y.value)});
  return std::fabs(x.value - y.value) <= mode.tolerance * scale + x.abs_error_bound + y.abs_error_bound;
}

/// A registered claim.
struct Identity {
  std::string id;
  std::string suite;   // core, table1, table2 or float
  std::string anchor;  // verbatim phrase locating the claim in its source
  Mode mode;
  std::vector<Branch> domain;
  Reading primary;
  std::vector<Reading> alternatives;
};

}  // namespace hyperseq

#endif  // HYPERSEQ_IDENTITIES_TYPES_HPP
