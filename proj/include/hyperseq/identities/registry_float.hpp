#ifndef HYPERSEQ_IDENTITIES_REGISTRY_FLOAT_HPP
#define HYPERSEQ_IDENTITIES_REGISTRY_FLOAT_HPP

// Floating-point identities: differences of sinh, cosh and the digamma function.

#include <vector>

#include "hyperseq/analytic.hpp"
#include "hyperseq/identities/helpers.hpp"

namespace hyperseq::rows {

namespace detail {

/// x = -2, -3/2, ..., 2
inline std::vector<Q> hyperbolic_grid() {
  std::vector<Q> g;
  for (long i = -4; i <= 4; ++i) g.push_back(fr(i, 2));
  return g;
}

}  // namespace detail

inline void register_float(std::vector<Identity>& out) {
  const std::string S = "float";
  using A = const Assignment&;

  for (Hyperbolic kind : {Hyperbolic::Sinh, Hyperbolic::Cosh}) {
    out.push_back(float_identity(
        kind == Hyperbolic::Sinh ? "prop-one11-sinh" : "prop-one11-cosh", S, "Effects of $\\Delta$ operator on",
        1e-12, {branch({range("k", 0, 15), ParamDecl::sampled("x", detail::hyperbolic_grid())})},
        [kind](A a) -> SequenceValue { return delta_hyperbolic_direct(kind, a.i("k"), a.q("x").to_double()); },
        [kind](A a) -> SequenceValue { return delta_hyperbolic_closed_form(kind, a.i("k"), a.q("x").to_double()); }));
  }

  out.push_back(float_identity(
      "rem-one11-x0", S, "closed formulas for the", 1e-12,
      {branch({part(1), range("k", 0, 15)}), branch({part(2), range("k", 0, 15)})},
      [](A a) -> SequenceValue {
        auto kind = a.i("part") == 1 ? Hyperbolic::Sinh : Hyperbolic::Cosh;
        return delta_hyperbolic_direct(kind, a.i("k"), 0.0);
      },
      [](A a) -> SequenceValue {
        auto kind = a.i("part") == 1 ? Hyperbolic::Sinh : Hyperbolic::Cosh;
        return delta_hyperbolic_at_zero(kind, a.i("k"));
      }));

  // Encoded as stated. The alternating sum equals -(k-1)!/x^(rising k), so
  // this entry reports FAIL at every point.
  out.push_back(float_identity(
      "prop-one6", S, "Considering digamma function with difference", 1e-9,
      {branch({range("k", 1, 10), ParamDecl::sampled("x", {Q(1), fr(1, 2), fr(3, 2), Q(5)})})},
      [](A a) -> SequenceValue {
        long k = a.i("k");
        return fact(k - 1) / rising_factorial(a.q("x"), k);
      },
      [](A a) -> SequenceValue {
        long k = a.i("k");
        double x = a.q("x").to_double();
        CertifiedReal s{0, 0};
        for (long i = 0; i <= k; ++i) s = s + to_certified(sgn(i) * C(k, i)) * digamma(x + i);
        return s;
      }));
}

}  // namespace hyperseq::rows

#endif  // HYPERSEQ_IDENTITIES_REGISTRY_FLOAT_HPP
