#ifndef HYPERSEQ_ANALYTIC_HPP
#define HYPERSEQ_ANALYTIC_HPP

// Floating-point evaluation with explicit error bounds: digamma, log-gamma,
// the real hyperharmonic function, convergent series with caller-supplied
// tail bounds, and forward differences of sinh / cosh.
//
// Internals run in long double; every result is returned as a double plus an
// absolute error bound that also covers the final rounding to double.

#include <cfloat>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <variant>

#include <json.hpp>

#include "hyperseq/errors.hpp"
#include "hyperseq/exactnum.hpp"

namespace hyperseq {

/// value +/- abs_error_bound encloses the true result.
struct CertifiedReal {
  double value = 0.0;
  double abs_error_bound = 0.0;

  bool contains(double x) const { return std::fabs(x - value) <= abs_error_bound; }

  nlohmann::json to_json() const { return {{"value", value}, {"abs_error_bound", abs_error_bound}}; }

  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
    double s = a.value + b.value;
    return {s, a.abs_error_bound + b.abs_error_bound + std::fabs(s) * DBL_EPSILON};
  }
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
    double s = a.value - b.value;
    return {s, a.abs_error_bound + b.abs_error_bound + std::fabs(s) * DBL_EPSILON};
  }
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
    double p = a.value * b.value;
    double err = std::fabs(a.value) * b.abs_error_bound + std::fabs(b.value) * a.abs_error_bound +
                 a.abs_error_bound * b.abs_error_bound + std::fabs(p) * DBL_EPSILON;
    return {p, err};
  }
};

/// An exact rational rounded to double, with its conversion error.
inline CertifiedReal to_certified(const ExactRational& q) {
  double v = q.to_double();
  return {v, std::fabs(v) * 2 * DBL_EPSILON};
}

namespace detail {

inline constexpr long double kLdEps = LDBL_EPSILON;

inline CertifiedReal certify(long double value, long double error) {
  if (!std::isfinite(value)) throw DomainError("result is not representable as a finite double");
  double v = static_cast<double>(value);
  long double rounding = std::fabs(static_cast<long double>(v) - value);
  long double total = error + rounding;
  // round the bound itself upward so it stays an enclosure
  double bound = static_cast<double>(total);
  if (static_cast<long double>(bound) < total) bound = std::nextafter(bound, std::numeric_limits<double>::infinity());
  return {v, bound};
}

// Even-index Bernoulli numbers B_2 .. B_16.
inline constexpr long double kBernoulli[] = {
    1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730, 7.0L / 6, -3617.0L / 510};

struct Enclosure {
  long double value;
  long double error;
};

// psi(x) for x > 0 by upward recurrence to y >= 10 and the asymptotic series.
inline Enclosure digamma_ld(long double x) {
  if (!(x > 0) || !std::isfinite(x)) throw DomainError("digamma needs a finite x > 0");
  long double shift = 0;
  long shift_terms = 0;
  long double y = x;
  while (y < 10) {
    shift += 1 / y;
    y += 1;
    ++shift_terms;
  }
  long double y2 = y * y, power = y2, series = 0;
  for (int k = 1; k <= 7; ++k) {
    series += kBernoulli[k - 1] / (2 * k * power);
    power *= y2;
  }
  long double remainder = std::fabs(kBernoulli[7]) / (16 * power);
  long double value = std::log(y) - 1 / (2 * y) - series - shift;
  long double rounding = 8 * kLdEps * ((shift_terms + 2) * shift + 24 * (std::fabs(std::log(y)) + 1));
  return {value, remainder + rounding};
}

// ln Gamma(x) for x > 0 by upward shift and Stirling's series with its remainder.
inline Enclosure log_gamma_ld(long double x) {
  if (!(x > 0) || !std::isfinite(x)) throw DomainError("log_gamma needs a finite x > 0");
  long double y = x, log_shift = 0;
  long shift_terms = 0;
  while (y < 10) {
    log_shift += std::log(y);
    y += 1;
    ++shift_terms;
  }
  constexpr long double half_log_two_pi = 0.918938533204672741780329736405617639861L;
  long double y2 = y * y, power = y, series = 0;
  for (int k = 1; k <= 7; ++k) {
    series += kBernoulli[k - 1] / ((2 * k) * (2 * k - 1) * power);
    power *= y2;
  }
  long double remainder = std::fabs(kBernoulli[7]) / (16 * 15 * power);
  long double main = (y - 0.5L) * std::log(y) - y + half_log_two_pi;
  long double value = main + series - log_shift;
  long double rounding = 8 * kLdEps * (std::fabs(y * std::log(y)) + y + 2 + (shift_terms + 1) * std::fabs(log_shift));
  return {value, remainder + rounding};
}

}  // namespace detail

/// psi(x) for x > 0.
inline CertifiedReal digamma(double x) {
  auto e = detail::digamma_ld(x);
  return detail::certify(e.value, e.error);
}

/// ln Gamma(x) for x > 0.
inline CertifiedReal log_gamma(double x) {
  auto e = detail::log_gamma_ld(x);
  return detail::certify(e.value, e.error);
}

/// Euler-Mascheroni constant.
inline CertifiedReal euler_gamma() {
  constexpr long double gamma = 0.577215664901532860606512090082402431042L;
  return detail::certify(gamma, 2 * detail::kLdEps);
}

/// Gamma(z+w) / (Gamma(z+1) Gamma(w)) * (psi(z+w) - psi(w)), restricted to
/// w > 0, z + w > 0 and z > -1 so every Gamma and psi argument is positive.
inline CertifiedReal hyperharmonic_real(double z, double w) {
  if (!(w > 0) || !(z + w > 0) || !(z > -1) || !std::isfinite(z) || !std::isfinite(w))
    throw DomainError("hyperharmonic_real needs w > 0, z + w > 0 and z > -1");
  long double zl = z, wl = w;
  auto a = detail::log_gamma_ld(zl + wl);
  auto b = detail::log_gamma_ld(zl + 1);
  auto c = detail::log_gamma_ld(wl);
  long double log_ratio = a.value - b.value - c.value;
  long double log_err = a.error + b.error + c.error + 4 * detail::kLdEps * std::fabs(log_ratio);
  if (log_ratio > 11000) throw DomainError("hyperharmonic_real overflows");
  long double ratio = std::exp(log_ratio);
  // exp(L +/- d) = ratio * (1 +/- (e^d - 1))
  long double ratio_err = ratio * (std::expm1(log_err) + 2 * detail::kLdEps);

  auto p = detail::digamma_ld(zl + wl);
  auto q = detail::digamma_ld(wl);
  long double diff = p.value - q.value;
  long double diff_err = p.error + q.error + 2 * detail::kLdEps * std::fabs(diff);

  long double value = ratio * diff;
  long double err = ratio * diff_err + std::fabs(diff) * ratio_err + ratio_err * diff_err +
                    2 * detail::kLdEps * std::fabs(value);
  return detail::certify(value, err);
}

/// One term of a series: exact rational or certified float.
using SeriesTerm = std::variant<ExactRational, CertifiedReal>;

struct SeriesOptions {
  double tolerance = 1e-9;
  long first_index = 0;
  long max_terms = 1'000'000;
};

namespace detail {

inline void accumulate(const SeriesTerm& t, long double& sum, long double& err, long double& magnitude) {
  long double v, e;
  if (const auto* q = std::get_if<ExactRational>(&t)) {
    v = q->to_double();
    e = std::fabs(v) * 2 * DBL_EPSILON;
  } else {
    const auto& c = std::get<CertifiedReal>(t);
    v = c.value;
    e = c.abs_error_bound;
  }
  sum += v;
  magnitude += std::fabs(v);
  err += e + std::fabs(sum) * kLdEps;
}

}  // namespace detail

/// Sums terms first_index, first_index + 1, ... until tail_bound(K), a bound on
/// sum_{k >= K} |term(k)|, drops below the tolerance. The returned bound is the
/// tail bound plus accumulated rounding. Throws ConvergenceError after max_terms.
inline CertifiedReal sum_series(const std::function<SeriesTerm(long)>& term,
                                const std::function<double(long)>& tail_bound, const SeriesOptions& options = {}) {
  long double sum = 0, err = 0, magnitude = 0;
  for (long count = 0, k = options.first_index; count < options.max_terms; ++count, ++k) {
    double tail = tail_bound(k);
    if (tail < options.tolerance) return detail::certify(sum, err + tail);
    detail::accumulate(term(k), sum, err, magnitude);
  }
  throw ConvergenceError("series did not reach tolerance within " + std::to_string(options.max_terms) + " terms");
}

/// Finite sum of term(first) .. term(last), no tail.
inline CertifiedReal partial_sum(const std::function<SeriesTerm(long)>& term, long first, long last) {
  long double sum = 0, err = 0, magnitude = 0;
  for (long k = first; k <= last; ++k) detail::accumulate(term(k), sum, err, magnitude);
  return detail::certify(sum, err);
}

enum class Hyperbolic { Sinh, Cosh };

/// Closed form of Delta^k applied to sinh or cosh at x:
/// (1/(2e^x)) (1 - 1/e)^k (e^(2x+k) + s), s = (-1)^(k+1) for sinh, (-1)^k for cosh.
inline CertifiedReal delta_hyperbolic_closed_form(Hyperbolic kind, long k, double x) {
  if (k < 0) throw DomainError("difference order must be >= 0");
  long double xl = x;
  long double e = std::exp(1.0L);
  long double s = (kind == Hyperbolic::Sinh) == (k % 2 == 0) ? -1.0L : 1.0L;
  long double scale = std::pow(1 - 1 / e, static_cast<long double>(k)) / (2 * std::exp(xl));
  long double growth = std::exp(2 * xl + k);
  long double value = scale * (growth + s);
  long double err = 4 * detail::kLdEps * (k + 12) * scale * (growth + 1);
  return detail::certify(value, err);
}

/// sum_i (-1)^(k-i) C(k, i) f(x + i) with f = sinh or cosh, summed directly.
inline CertifiedReal delta_hyperbolic_direct(Hyperbolic kind, long k, double x) {
  if (k < 0) throw DomainError("difference order must be >= 0");
  long double sum = 0, magnitude = 0, c = 1;  // c = C(k, i)
  for (long i = 0; i <= k; ++i) {
    long double arg = static_cast<long double>(x) + i;
    long double f = kind == Hyperbolic::Sinh ? std::sinh(arg) : std::cosh(arg);
    long double term = c * f;
    sum += ((k - i) % 2 == 0) ? term : -term;
    magnitude += std::fabs(term);
    c = c * (k - i) / (i + 1);
  }
  return detail::certify(sum, 4 * detail::kLdEps * (k + 4) * magnitude);
}

/// The x = 0 specialisation written as (e-1)^k (e^k + s) / (2 e^k).
inline CertifiedReal delta_hyperbolic_at_zero(Hyperbolic kind, long k) {
  if (k < 0) throw DomainError("difference order must be >= 0");
  long double e = std::exp(1.0L);
  long double s = (kind == Hyperbolic::Sinh) == (k % 2 == 0) ? -1.0L : 1.0L;
  long double ek = std::pow(e, static_cast<long double>(k));
  long double num = std::pow(e - 1, static_cast<long double>(k));
  long double value = num * (ek + s) / (2 * ek);
  long double err = 4 * detail::kLdEps * (2 * k + 12) * num * (ek + 1) / (2 * ek);
  return detail::certify(value, err);
}

}  // namespace hyperseq

#endif  // HYPERSEQ_ANALYTIC_HPP
