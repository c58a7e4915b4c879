#ifndef HYPERSEQ_TESTS_ORACLES_HPP
#define HYPERSEQ_TESTS_ORACLES_HPP

// Reference implementations for tests. They work on raw mpq_class values and
// share no code with the library, so agreement is a genuine cross-check.

#include <gmpxx.h>

#include <random>
#include <vector>

#include "hyperseq/exactnum.hpp"

namespace oracle {

using R = mpq_class;

inline R q(long p, long d = 1) {
  R r(p, d);
  r.canonicalize();
  return r;
}

inline hyperseq::ExactRational lift(const R& r) {
  return hyperseq::ExactRational::make(r.get_num(), r.get_den());
}

/// GMP's own binomial, valid for negative n as well.
inline R binom(long n, long k) {
  if (k < 0) return 0;
  mpz_class r;
  mpz_class top(n);
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return R(r);
}

inline R harmonic(long n, long m = 1) {
  R s = 0;
  for (long k = 1; k <= n; ++k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m < 0 ? -m : m));
    s += m >= 0 ? R(1, 1) / R(p) : R(p);
  }
  return s;
}

/// h_n^(r) for r >= 1 by r-1 rounds of prefix sums over H_1..H_n.
inline std::vector<R> hyperharmonic_row(long n_max, long r) {
  std::vector<R> row(static_cast<std::size_t>(n_max) + 1);
  for (long n = 1; n <= n_max; ++n) row[n] = row[n - 1] + R(1, n);
  for (long level = 2; level <= r; ++level)
    for (long n = 1; n <= n_max; ++n) row[n] += row[n - 1];
  return row;
}

inline R hyperharmonic(long n, long r) { return hyperharmonic_row(n, r)[n]; }

/// Piecewise definition of h_n^(-r), n, r >= 1.
inline R hyperharmonic_neg(long n, long r) {
  if (n == 1) return 1;
  if (r >= n) return 0;
  R num = (r % 2 == 0) ? 1 : -1;
  for (long i = 2; i <= r; ++i) num *= i;
  R den = 1;
  for (long i = 0; i <= r; ++i) den *= n - i;
  return num / den;
}

/// F_k by forward iteration, or backward through F_{k} = F_{k+2} - F_{k+1}.
inline R fibonacci(long k) {
  mpz_class a = 0, b = 1;  // F_0, F_1
  if (k >= 0) {
    for (long i = 0; i < k; ++i) {
      mpz_class t = a + b;
      a = b;
      b = t;
    }
    return R(a);
  }
  for (long i = 0; i > k; --i) {  // (a, b) = (F_i, F_{i+1}) -> (F_{i-1}, F_i)
    mpz_class prev = b - a;
    b = a;
    a = prev;
  }
  return R(a);
}

inline R rising(const R& x, long n) {
  R p = 1;
  for (long i = 0; i < n; ++i) p *= x + i;
  return p;
}

/// Coefficients of prod_i (x + a_i) by repeated polynomial multiplication.
inline std::vector<R> poly_from_roots(const std::vector<R>& a) {
  std::vector<R> p{R(1)};
  for (const auto& ai : a) {
    std::vector<R> next(p.size() + 1, R(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j + 1] += p[j];
      next[j] += p[j] * ai;
    }
    p.swap(next);
  }
  return p;
}

inline R poly_eval(const std::vector<R>& p, const R& x) {
  R s = 0;
  for (std::size_t j = p.size(); j-- > 0;) s = s * x + p[j];
  return s;
}

/// Random small rational p/q with |p| <= pmax, 1 <= q <= qmax.
inline R random_rational(std::mt19937_64& rng, long pmax = 20, long qmax = 9) {
  std::uniform_int_distribution<long> P(-pmax, pmax), Q(1, qmax);
  return q(P(rng), Q(rng));
}

}  // namespace oracle

#endif  // HYPERSEQ_TESTS_ORACLES_HPP
