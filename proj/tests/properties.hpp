#ifndef HYPERSEQ_TESTS_PROPERTIES_HPP
#define HYPERSEQ_TESTS_PROPERTIES_HPP

// Randomised property checks. Each returns the number of failing cases out of
// `cases` draws from a fixed-seed mt19937_64.

#include <random>
#include <string>
#include <vector>

#include "hyperseq/opcalc.hpp"
#include "oracles.hpp"

namespace props {

using hyperseq::ExactRational;
using oracle::lift;
using oracle::R;

struct Result {
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

/// inverse(transform(v)) == v and transform(inverse(v)) == v, with the forward
/// transform also compared against a direct GMP evaluation.
inline Result binomial_transform_involution(long cases, std::uint64_t seed = 0x5eed0001) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 32);
  Result res;
  for (long c = 0; c < cases; ++c) {
    std::vector<ExactRational> v;
    std::vector<R> rv;
    for (int i = 0, n = len(rng); i < n; ++i) {
      R x = oracle::random_rational(rng, 50, 12);
      rv.push_back(x);
      v.push_back(lift(x));
    }
    auto t = hyperseq::binomial_transform(v);
    bool ok = hyperseq::inverse_binomial_transform(t) == v && hyperseq::binomial_transform(hyperseq::inverse_binomial_transform(v)) == v;
    for (std::size_t k = 0; ok && k < rv.size(); ++k) {
      R s = 0;
      for (std::size_t i = 0; i <= k; ++i) s += oracle::binom(static_cast<long>(k), static_cast<long>(i)) * rv[i];
      ok = lift(s) == t[k];
    }
    res.record(ok, "length " + std::to_string(v.size()));
  }
  return res;
}

/// Delta^n (x f(x)) = x Delta^n f(x) + n Delta^(n-1) f(x+1) for random
/// polynomial f with rational coefficients.
inline Result difference_product_rule(long cases, std::uint64_t seed = 0x5eed0002) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, 7), order(1, 10), point(-12, 12);
  Result res;
  for (long c = 0; c < cases; ++c) {
    std::vector<R> coeffs;
    for (int i = 0, d = deg(rng); i <= d; ++i) coeffs.push_back(oracle::random_rational(rng));
    hyperseq::TermOracle f{[coeffs](long x) { return lift(oracle::poly_eval(coeffs, R(x))); }};
    hyperseq::TermOracle xf{[coeffs](long x) { return lift(R(x) * oracle::poly_eval(coeffs, R(x))); }};
    long n = order(rng), x = point(rng);
    ExactRational lhs = hyperseq::forward_difference(xf, n, x);
    ExactRational rhs = ExactRational(x) * hyperseq::forward_difference(f, n, x) +
                        ExactRational(n) * hyperseq::forward_difference(f, n - 1, x + 1);
    res.record(lhs == rhs, "n=" + std::to_string(n) + " x=" + std::to_string(x));
  }
  return res;
}

/// Derivative at zero of (1/c) prod (x + a_i) and of c / prod (x + a_i)
/// against the coefficients of the expanded polynomial.
inline Result derivative_at_zero_vs_expansion(long cases, std::uint64_t seed = 0x5eed0003) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(1, 10);
  Result res;
  auto nonzero = [&rng] {
    R x;
    do x = oracle::random_rational(rng, 15, 7);
    while (x == 0);
    return x;
  };
  for (long c = 0; c < cases; ++c) {
    std::vector<R> ra;
    std::vector<ExactRational> a;
    for (int i = 0, n = count(rng); i < n; ++i) {
      ra.push_back(nonzero());
      a.push_back(lift(ra.back()));
    }
    R scale = nonzero();
    auto poly = oracle::poly_from_roots(ra);
    // (c/P)'(0) = -c P'(0) / P(0)^2
    R expected_linear = poly[1] / scale;
    R expected_recip = -scale * poly[1] / (poly[0] * poly[0]);
    bool ok = hyperseq::derivative_at_zero_linear_factors(a, lift(scale)) == lift(expected_linear) &&
              hyperseq::derivative_at_zero_reciprocal(a, lift(scale)) == lift(expected_recip) &&
              hyperseq::expand_linear_factors(a)[1] == lift(poly[1]);
    res.record(ok, std::to_string(a.size()) + " factors");
  }
  return res;
}

}  // namespace props

#endif  // HYPERSEQ_TESTS_PROPERTIES_HPP
