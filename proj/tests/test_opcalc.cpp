#include <gtest/gtest.h>

#include "hyperseq/opcalc.hpp"
#include "oracles.hpp"

using hyperseq::ExactRational;
using Q = ExactRational;
using oracle::lift;

namespace {

hyperseq::TermOracle harmonic_oracle() {
  return {[](long n) { return hyperseq::harmonic(n); }, 0};
}

}  // namespace

TEST(ForwardDifference, OfHarmonicNumbers) {
  // Delta H_x = 1/(x+1); Delta^2 H_x = -1/((x+1)(x+2))
  EXPECT_EQ(hyperseq::forward_difference(harmonic_oracle(), 1, 3), Q::make(1, 4));
  EXPECT_EQ(hyperseq::forward_difference(harmonic_oracle(), 2, 1), Q::make(-1, 6));
  EXPECT_EQ(hyperseq::forward_difference(harmonic_oracle(), 0, 5), hyperseq::harmonic(5));
}

TEST(ForwardDifference, WindowMustStayInDomain) {
  EXPECT_THROW(hyperseq::forward_difference(harmonic_oracle(), 2, -1), hyperseq::DomainError);
  hyperseq::TermOracle bounded{[](long n) { return Q(n); }, 0, 5};
  EXPECT_THROW(hyperseq::forward_difference(bounded, 3, 3), hyperseq::DomainError);
  EXPECT_THROW(hyperseq::forward_difference(bounded, -1, 0), hyperseq::DomainError);
}

TEST(ForwardDifference, PolynomialOfDegreeDVanishesAfterDPlusOneSteps) {
  hyperseq::TermOracle cube{[](long n) { return Q(n).pow(3) - Q(2) * Q(n); }};
  EXPECT_EQ(hyperseq::forward_difference(cube, 3, -7), Q(6));
  EXPECT_EQ(hyperseq::forward_difference(cube, 4, 11), Q(0));
}

TEST(BinomialTransform, RoundTripAndKnownPair) {
  // b_i = 1 for all i maps to a_k = 2^k
  std::vector<Q> ones(10, Q(1));
  auto a = hyperseq::binomial_transform(ones);
  for (long k = 0; k < 10; ++k) EXPECT_EQ(a[k], Q(2).pow(k));
  auto back = hyperseq::inverse_binomial_transform(a);
  EXPECT_EQ(back, ones);
  EXPECT_TRUE(hyperseq::binomial_transform(std::vector<Q>{}).empty());
}

TEST(DerivativeAtZero, LinearFactorsMatchesExpansion) {
  std::vector<Q> a = {Q(2), Q::make(-1, 3), Q(5)};
  std::vector<oracle::R> ra = {oracle::q(2), oracle::q(-1, 3), oracle::q(5)};
  auto poly = oracle::poly_from_roots(ra);
  EXPECT_EQ(hyperseq::derivative_at_zero_linear_factors(a, Q(7)), lift(poly[1]) / Q(7));
  EXPECT_EQ(hyperseq::expand_linear_factors(a)[1], lift(poly[1]));
}

TEST(DerivativeAtZero, ReciprocalForm) {
  // d/dx 1/((x+1)(x+2)) at 0 = -(1/2)(1 + 1/2) = -3/4
  std::vector<Q> a = {Q(1), Q(2)};
  EXPECT_EQ(hyperseq::derivative_at_zero_reciprocal(a, Q(1)), Q::make(-3, 4));
}

TEST(DerivativeAtZero, ZeroFactorIsADomainError) {
  std::vector<Q> a = {Q(1), Q(0)};
  EXPECT_THROW(hyperseq::derivative_at_zero_linear_factors(a, Q(1)), hyperseq::DomainError);
  EXPECT_THROW(hyperseq::derivative_at_zero_reciprocal(a, Q(1)), hyperseq::DomainError);
  std::vector<Q> b = {Q(1)};
  EXPECT_THROW(hyperseq::derivative_at_zero_linear_factors(b, Q(0)), hyperseq::DomainError);
}

TEST(DerivativeAtZero, BinomialGivesHyperharmonic) {
  // d/dx C(x+n+r-1, n) at 0 = h_n^(r): factors r..r+n-1, scale n!
  for (long n = 1; n <= 12; ++n)
    for (long r = 1; r <= 6; ++r) {
      std::vector<Q> a;
      for (long i = 0; i < n; ++i) a.emplace_back(r + i);
      EXPECT_EQ(hyperseq::derivative_at_zero_linear_factors(a, Q(hyperseq::factorial(n))), hyperseq::hyperharmonic(n, r));
    }
}

TEST(Leaping, FactorsAndValue) {
  auto f = hyperseq::leaping_factors(3, 2);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[2], Q(9));
  // (1/36)(x+1)(x+4)(x+9) at x = 0 is 1
  EXPECT_EQ(hyperseq::leaping_binomial(Q(0), 3, 2), Q(1));
  EXPECT_EQ(hyperseq::leaping_binomial(Q(1), 2, 1), Q(3));
  EXPECT_THROW(hyperseq::leaping_binomial(Q(0), 0, 1), hyperseq::DomainError);
  // derivative at zero gives H_n^(m)
  EXPECT_EQ(hyperseq::derivative_at_zero_linear_factors(f, Q(hyperseq::factorial(3)).pow(2)),
            hyperseq::gen_harmonic(3, 2));
}

TEST(Hypergeometric, TerminatingSeries) {
  // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
  for (long n = 0; n <= 8; ++n) {
    Q b = Q::make(1, 2), c = Q::make(7, 3);
    EXPECT_EQ(hyperseq::hypergeometric_terminating(-n, b, c, Q(1)),
              hyperseq::rising_factorial(c - b, n) / hyperseq::rising_factorial(c, n));
  }
  EXPECT_THROW(hyperseq::hypergeometric_terminating(1, Q(1), Q(1), Q(1)), hyperseq::DomainError);
  EXPECT_THROW(hyperseq::hypergeometric_terminating(-3, Q(1), Q(-1), Q(1)), hyperseq::DomainError);
}

TEST(Hypergeometric, LowerDerivativeMatchesDifferenceQuotientLimit) {
  // The derivative in c is linear in the reciprocal-rising derivatives;
  // check against the exact derivative of the Chu-Vandermonde closed form at z = 1:
  // d/dc (c-b)_n/(c)_n = (c-b)_n/(c)_n * (sum 1/(c-b+i) - sum 1/(c+i)).
  Q b = Q::make(1, 2), c = Q(3);
  for (long n = 1; n <= 6; ++n) {
    Q s = 0;
    for (long i = 0; i < n; ++i) s += (c - b + Q(i)).reciprocal() - (c + Q(i)).reciprocal();
    Q expected = hyperseq::rising_factorial(c - b, n) / hyperseq::rising_factorial(c, n) * s;
    EXPECT_EQ(hyperseq::hypergeometric_terminating_dlower(-n, b, c, Q(1)), expected) << n;
  }
}

TEST(ReciprocalRising, Derivative) {
  // d/dj 1/((c+j)(c+j+1)) at j = 0, c = 1: -(1/2)(1 + 1/2) = -3/4
  EXPECT_EQ(hyperseq::dx_reciprocal_rising(Q(1), 2), Q::make(-3, 4));
  EXPECT_EQ(hyperseq::dx_reciprocal_rising(Q(5), 0), Q(0));
  EXPECT_THROW(hyperseq::dx_reciprocal_rising(Q(-1), 3), hyperseq::DomainError);
}

TEST(PowerSeries, HyperharmonicGeneratingFunction) {
  auto gf = hyperseq::gf_hyperharmonic(2, 3);
  EXPECT_EQ(gf.coefficient(0), Q(0));
  EXPECT_EQ(gf.coefficient(1), Q(1));
  EXPECT_EQ(gf.coefficient(2), Q::make(5, 2));
  EXPECT_EQ(gf.coefficient(3), Q::make(13, 3));
  EXPECT_THROW(gf.coefficient(4), hyperseq::DomainError);
  EXPECT_THROW(hyperseq::gf_hyperharmonic(0, 3), hyperseq::DomainError);
}

TEST(PowerSeries, HarmonicAlphaBeta) {
  auto h = hyperseq::gf_harmonic(20);
  auto a = hyperseq::gf_alpha(3, 20);
  auto b = hyperseq::gf_beta(3, 20);
  for (long n = 1; n <= 20; ++n) {
    EXPECT_EQ(h.coefficient(n), hyperseq::harmonic(n));
    EXPECT_EQ(a.coefficient(n), hyperseq::alpha(n, 3));
    EXPECT_EQ(b.coefficient(n), hyperseq::beta(n, 3));
  }
  EXPECT_EQ(hyperseq::gf_harmonic(0).coefficients().size(), 1u);
}
