#ifndef HYPERSEQ_OPCALC_HPP
#define HYPERSEQ_OPCALC_HPP

// Operator calculus over exact rationals: forward differences, the binomial
// transform, derivatives at zero of factored linear forms, terminating
// hypergeometric sums and truncated formal power series.

#include <algorithm>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperseq/errors.hpp"
#include "hyperseq/exactnum.hpp"
#include "hyperseq/sequences.hpp"

namespace hyperseq {

/// A pure integer-indexed sequence together with the interval it is defined on.
struct TermOracle {
  std::function<ExactRational(long)> eval;
  long first = std::numeric_limits<long>::min();
  long last = std::numeric_limits<long>::max();

  bool covers(long lo, long hi) const { return lo >= first && hi <= last; }
  ExactRational operator()(long i) const { return eval(i); }
};

/// Delta^k f(x), evaluated twice: by k rounds of first differences and by the
/// alternating binomial sum. A disagreement throws IntegrityError.
inline ExactRational forward_difference(const TermOracle& f, long k, long x) {
  if (k < 0) throw DomainError("forward_difference needs k >= 0");
  if (!f.covers(x, x + k))
    throw DomainError("forward_difference window [" + std::to_string(x) + ", " + std::to_string(x + k) +
                      "] leaves the oracle's domain");
  std::vector<ExactRational> values;
  values.reserve(static_cast<std::size_t>(k) + 1);
  for (long i = 0; i <= k; ++i) values.push_back(f(x + i));

  std::vector<ExactRational> iterated = values;
  for (long round = 0; round < k; ++round)
    for (long i = 0; i + 1 < static_cast<long>(iterated.size()) - round; ++i)
      iterated[i] = iterated[i + 1] - iterated[i];

  ExactRational alternating = 0;
  for (long i = 0; i <= k; ++i) {
    ExactRational term = binom(k, i) * values[i];
    if (parity_sign(k - i) > 0) alternating += term; else alternating -= term;
  }
  if (!(iterated[0] == alternating))
    throw IntegrityError("forward_difference: iterated " + iterated[0].str() + " != binomial sum " +
                         alternating.str());
  return alternating;
}

/// a_k = sum_i C(k, i) b_i.
inline std::vector<ExactRational> binomial_transform(std::span<const ExactRational> b) {
  std::vector<ExactRational> a(b.size());
  for (std::size_t k = 0; k < b.size(); ++k)
    for (std::size_t i = 0; i <= k; ++i) a[k] += binom(static_cast<long>(k), static_cast<long>(i)) * b[i];
  return a;
}

/// b_k = sum_i (-1)^(k+i) C(k, i) a_i.
inline std::vector<ExactRational> inverse_binomial_transform(std::span<const ExactRational> a) {
  std::vector<ExactRational> b(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      ExactRational term = binom(static_cast<long>(k), static_cast<long>(i)) * a[i];
      if ((k + i) % 2 == 0) b[k] += term; else b[k] -= term;
    }
  return b;
}

namespace detail {

inline void require_nonzero_factors(std::span<const ExactRational> a, const ExactRational& c, const char* who) {
  if (c.is_zero()) throw DomainError(std::string(who) + ": zero scale");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].is_zero()) throw DomainError(std::string(who) + ": zero factor at position " + std::to_string(i));
}

}  // namespace detail

/// d/dx [ (1/c) prod_i (x + a_i) ] at x = 0, i.e. (prod a / c) * sum 1/a_i.
inline ExactRational derivative_at_zero_linear_factors(std::span<const ExactRational> a, const ExactRational& c) {
  detail::require_nonzero_factors(a, c, "derivative_at_zero_linear_factors");
  ExactRational product = 1, reciprocal_sum = 0;
  for (const auto& ai : a) {
    product *= ai;
    reciprocal_sum += ai.reciprocal();
  }
  return product / c * reciprocal_sum;
}

/// d/dx [ c / prod_i (x + a_i) ] at x = 0, i.e. -(c / prod a) * sum 1/a_i.
inline ExactRational derivative_at_zero_reciprocal(std::span<const ExactRational> a, const ExactRational& c) {
  detail::require_nonzero_factors(a, c, "derivative_at_zero_reciprocal");
  ExactRational product = 1, reciprocal_sum = 0;
  for (const auto& ai : a) {
    product *= ai;
    reciprocal_sum += ai.reciprocal();
  }
  return -(c / product) * reciprocal_sum;
}

/// Coefficients (ascending powers of x) of prod_i (x + a_i).
inline std::vector<ExactRational> expand_linear_factors(std::span<const ExactRational> a) {
  std::vector<ExactRational> poly{ExactRational(1)};
  for (const auto& ai : a) {
    std::vector<ExactRational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += ai * poly[j];
      next[j + 1] += poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

/// Leaping binomial coefficient (1/(n!)^m) prod_{i=1..n} (x + i^m).
inline ExactRational leaping_binomial(const ExactRational& x, long n, long m) {
  if (n < 1 || m < 1) throw DomainError("leaping_binomial needs n, m >= 1");
  ExactRational p = 1;
  for (long i = 1; i <= n; ++i) p *= x + ExactRational(i).pow(m);
  return p / ExactRational(factorial(n)).pow(m);
}

/// The factors i^m, i = 1..n, of a leaping binomial coefficient.
inline std::vector<ExactRational> leaping_factors(long n, long m) {
  std::vector<ExactRational> a;
  for (long i = 1; i <= n; ++i) a.push_back(ExactRational(i).pow(m));
  return a;
}

/// d/dj [ 1 / (c+j)^(rising k) ] at j = 0.
inline ExactRational dx_reciprocal_rising(const ExactRational& c, long k) {
  if (k < 0) throw DomainError("dx_reciprocal_rising needs k >= 0");
  ExactRational s = 0;
  for (long i = 0; i < k; ++i) {
    ExactRational d = c + i;
    if (d.is_zero()) throw DomainError("dx_reciprocal_rising: pole at c + " + std::to_string(i) + " = 0");
    s += d.reciprocal();
  }
  return -s / rising_factorial(c, k);
}

namespace detail {

// (a)_k (b)_k z^k / k! for the k-th term of 2F1 with a <= 0.
inline ExactRational hypergeometric_numerator(long a, const ExactRational& b, const ExactRational& z, long k) {
  return rising_factorial(a, k) * rising_factorial(b, k) * z.pow(k) / ExactRational(factorial(k));
}

inline void check_hypergeometric_args(long a, const ExactRational& c) {
  if (a > 0) throw DomainError("hypergeometric_terminating needs a nonpositive upper parameter");
  for (long i = 0; i < -a; ++i)
    if ((c + i).is_zero()) throw DomainError("hypergeometric_terminating: pole at c + " + std::to_string(i) + " = 0");
}

}  // namespace detail

/// 2F1(a, b; c; z) for integer a <= 0; the series stops after |a| + 1 terms.
inline ExactRational hypergeometric_terminating(long a, const ExactRational& b, const ExactRational& c,
                                                const ExactRational& z) {
  detail::check_hypergeometric_args(a, c);
  ExactRational s = 0;
  for (long k = 0; k <= -a; ++k)
    s += detail::hypergeometric_numerator(a, b, z, k) / rising_factorial(c, k);
  return s;
}

/// Partial derivative of the terminating 2F1 with respect to the lower parameter c.
inline ExactRational hypergeometric_terminating_dlower(long a, const ExactRational& b, const ExactRational& c,
                                                       const ExactRational& z) {
  detail::check_hypergeometric_args(a, c);
  ExactRational s = 0;
  for (long k = 1; k <= -a; ++k) s += detail::hypergeometric_numerator(a, b, z, k) * dx_reciprocal_rising(c, k);
  return s;
}

/// Truncated formal power series sum_{n<=N} c_n z^n with exact coefficients.
class PowerSeries {
 public:
  explicit PowerSeries(long order) : coefficients_(static_cast<std::size_t>(checked(order)) + 1) {}
  explicit PowerSeries(std::vector<ExactRational> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw DomainError("power series needs at least one coefficient");
  }

  long order() const { return static_cast<long>(coefficients_.size()) - 1; }

  const ExactRational& coefficient(long n) const {
    if (n < 0 || n > order())
      throw DomainError("coefficient " + std::to_string(n) + " beyond truncation order " + std::to_string(order()));
    return coefficients_[n];
  }
  void set(long n, ExactRational v) {
    if (n < 0 || n > order()) throw DomainError("coefficient index out of range");
    coefficients_[n] = std::move(v);
  }
  const std::vector<ExactRational>& coefficients() const { return coefficients_; }

  PowerSeries truncated(long order) const {
    return PowerSeries(std::vector<ExactRational>(coefficients_.begin(),
                                                  coefficients_.begin() + std::min(order, this->order()) + 1));
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (long n = 0; n <= r.order(); ++n) r.coefficients_[n] = a.coefficients_[n] + b.coefficients_[n];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (long n = 0; n <= r.order(); ++n) r.coefficients_[n] = a.coefficients_[n] - b.coefficients_[n];
    return r;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (long n = 0; n <= r.order(); ++n)
      for (long i = 0; i <= n; ++i) r.coefficients_[n] += a.coefficients_[i] * b.coefficients_[n - i];
    return r;
  }
  friend PowerSeries operator*(const ExactRational& s, const PowerSeries& a) {
    PowerSeries r = a;
    for (auto& c : r.coefficients_) c *= s;
    return r;
  }

  /// JSON array of canonical rational strings, index = exponent.
  nlohmann::json to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : coefficients_) out.push_back(c.str());
    return out;
  }

 private:
  static long checked(long order) {
    if (order < 0) throw DomainError("power series order must be >= 0");
    return order;
  }
  std::vector<ExactRational> coefficients_;
};

inline PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }
inline const ExactRational& ps_coeff(const PowerSeries& s, long n) { return s.coefficient(n); }

/// 1/(1-z) = sum z^n.
inline PowerSeries ps_geometric(long order) {
  PowerSeries s(order);
  for (long n = 0; n <= order; ++n) s.set(n, 1);
  return s;
}

/// (1-z)^(-r) built as an r-fold product of geometric series.
inline PowerSeries ps_inverse_power(long r, long order) {
  if (r < 0) throw DomainError("ps_inverse_power needs r >= 0");
  PowerSeries s(order);
  s.set(0, 1);
  PowerSeries g = ps_geometric(order);
  for (long i = 0; i < r; ++i) s = s * g;
  return s;
}

/// -ln(1-z) = sum_{k>=1} z^k / k.
inline PowerSeries ps_neg_log_one_minus(long order) {
  PowerSeries s(order);
  for (long k = 1; k <= order; ++k) s.set(k, ExactRational::make(1, k));
  return s;
}

/// -ln(1-z)/(1-z)^r truncated at z^order; coefficient n is h_n^(r).
inline PowerSeries gf_hyperharmonic(long r, long order) {
  if (r < 1) throw DomainError("gf_hyperharmonic needs r >= 1");
  return ps_neg_log_one_minus(order) * ps_inverse_power(r, order);
}

/// -ln(1-z)/(1-z); coefficient n is H_n.
inline PowerSeries gf_harmonic(long order) { return gf_hyperharmonic(1, order); }

/// (1/r)(1-z)^(-r); coefficient k is beta(k, r).
inline PowerSeries gf_beta(long r, long order) {
  if (r < 1) throw DomainError("gf_beta needs r >= 1");
  return ExactRational::make(1, r) * ps_inverse_power(r, order);
}

/// z/(1-z) - r ln(1-z); coefficient k >= 1 is alpha(k, r), coefficient 0 is 0.
inline PowerSeries gf_alpha(long r, long order) {
  PowerSeries shifted(order);
  for (long k = 1; k <= order; ++k) shifted.set(k, 1);
  return shifted + ExactRational(r) * ps_neg_log_one_minus(order);
}

}  // namespace hyperseq

#endif  // HYPERSEQ_OPCALC_HPP
