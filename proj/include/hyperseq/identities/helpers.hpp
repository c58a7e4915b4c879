#ifndef HYPERSEQ_IDENTITIES_HELPERS_HPP
#define HYPERSEQ_IDENTITIES_HELPERS_HPP

// Shorthand used by the registry tables. Everything here is a thin wrapper
// over the sequences / opcalc layers so that registry entries read close to
// the formulas they encode.

#include <string>
#include <utility>
#include <vector>

#include "hyperseq/identities/types.hpp"
#include "hyperseq/opcalc.hpp"
#include "hyperseq/sequences.hpp"

namespace hyperseq::rows {

using Q = ExactRational;

inline Q fr(long p, long q) { return Q::make(p, q); }
inline Q sgn(long k) { return Q(parity_sign(k)); }
inline Q H(long n) { return harmonic(n); }
inline Q Hm(long n, long m) { return gen_harmonic(n, m); }
inline Q C(long n, long k) { return binom(n, k); }
inline Q C(const Q& x, long k) { return binomial_general(x, k); }
inline Q fact(long n) { return Q(factorial(n)); }
inline Q F(long k) { return Q(fibonacci(k)); }

/// h_n^(r) for any integer order (negative orders by the piecewise definition).
inline Q h(long n, long r) { return hyperharmonic_signed(n, r); }

/// Which value h_n^(1/2) takes. Default: the hyperharmonic-function reduction.
/// Alternative: C(n - 1/2, n)(H_2n - H_n), defined only at order exactly 1/2.
enum class HalfConvention { Default, Alternative };

/// h_n^(w) for rational w: integer orders dispatch to h(n, r), the rest go
/// through the hyperharmonic function.
inline Q hq(long n, const Q& w, HalfConvention conv = HalfConvention::Default) {
  if (w.is_integer()) return h(n, w.to_long());
  if (conv == HalfConvention::Alternative) {
    if (!(w == fr(1, 2))) throw DomainError("alternative reading is defined only at order 1/2");
    return C(Q(n) - fr(1, 2), n) * (H(2 * n) - H(n));
  }
  return hyperharmonic_rational_order(n, w);
}

inline Branch branch(std::vector<ParamDecl> params, Constraint constraint = {}) {
  return {std::move(params), std::move(constraint)};
}

inline ParamDecl range(std::string name, long lo, long hi) { return ParamDecl::range(std::move(name), lo, hi); }
inline ParamDecl part(long value) { return ParamDecl::fixed("part", value); }
inline ParamDecl sampled(std::string name) { return ParamDecl::sampled(std::move(name)); }

inline Identity exact_identity(std::string id, std::string suite, std::string anchor, std::vector<Branch> domain,
                               Evaluator lhs, Evaluator rhs) {
  return {std::move(id), std::move(suite), std::move(anchor), Mode::exact(), std::move(domain),
          Reading{"default", std::move(lhs), std::move(rhs)}, {}};
}

inline Identity float_identity(std::string id, std::string suite, std::string anchor, double tol,
                               std::vector<Branch> domain, Evaluator lhs, Evaluator rhs) {
  return {std::move(id), std::move(suite), std::move(anchor), Mode::floating(tol), std::move(domain),
          Reading{"default", std::move(lhs), std::move(rhs)}, {}};
}

/// sum_{i=lo}^{hi} f(i)
template <typename Fn>
Q sum(long lo, long hi, Fn&& f) {
  Q s = 0;
  for (long i = lo; i <= hi; ++i) s += f(i);
  return s;
}

/// sum_{i=0}^{k} (-1)^(k-i) C(k, i) f(i)
template <typename Fn>
Q alt_binomial_sum(long k, Fn&& f, long lo = 0) {
  return sum(lo, k, [&](long i) { return sgn(k - i) * C(k, i) * f(i); });
}

inline std::vector<Q> integers(long from, long to) {
  std::vector<Q> v;
  for (long i = from; i <= to; ++i) v.emplace_back(i);
  return v;
}

}  // namespace hyperseq::rows

#endif  // HYPERSEQ_IDENTITIES_HELPERS_HPP
