#ifndef HYPERSEQ_IDENTITIES_REGISTRY_TABLES_HPP
#define HYPERSEQ_IDENTITIES_REGISTRY_TABLES_HPP

// Summation rows: harmonic versions (table1) and their hyperharmonic
// generalisations (table2). Rows containing h^(1/2) carry a second reading
// under the alternative half-integer convention.

#include <cmath>
#include <vector>

#include "hyperseq/analytic.hpp"
#include "hyperseq/identities/helpers.hpp"

namespace hyperseq::rows {

namespace detail {

inline CertifiedReal ln2() {
  return hyperseq::detail::certify(0.693147180559945309417232121458176568L, 2 * hyperseq::detail::kLdEps);
}

inline CertifiedReal e_const() {
  return hyperseq::detail::certify(std::exp(1.0L), 4 * hyperseq::detail::kLdEps);
}

// 1/k! as a double upper bound (slightly inflated).
inline double inv_factorial(long k) { return k < 0 ? 1.0 : 1.01 * std::exp(-std::lgamma(k + 1.0)); }

inline constexpr double kSeriesTolerance = 1e-16;

// sum_{k>=0} h_k^(r) / 2^k. Terms are bounded by u_k = C(k+r-1, r-1)(k+r)/2^k,
// whose ratio drops below 3/4 once k >= 2r, giving tail <= 4 u_K.
inline CertifiedReal hyperharmonic_over_powers_of_two(long r) {
  auto term = [r](long k) -> SeriesTerm { return k == 0 ? Q(0) : h(k, r) / Q(2).pow(k); };
  auto tail = [r](long K) -> double {
    if (K < 2 * r) return INFINITY;
    double lc = std::lgamma(K + r + 0.0) - std::lgamma(r + 0.0) - std::lgamma(K + 1.0);
    return 1.01 * 4 * std::exp(lc - K * std::log(2.0)) * (K + r);
  };
  return sum_series(term, tail, {kSeriesTolerance * std::ldexp(1.0, static_cast<int>(r)), 0});
}

// e * sum_{k>=k0} (-1)^k / ((r+k)^2 k!) with an alternating-factorial tail.
inline CertifiedReal e_times_alternating(long r, long k0, long sign_shift) {
  auto term = [=](long k) -> SeriesTerm { return sgn(k + sign_shift) / (Q(r + k).pow(2) * fact(k)); };
  auto tail = [](long K) -> double { return 2 * inv_factorial(K); };
  return e_const() * sum_series(term, tail, {kSeriesTolerance, k0});
}

}  // namespace detail

inline void register_table1(std::vector<Identity>& out) {
  const std::string S = "table1";
  const std::string anchor = "the numbers on the LHS are the numbers of formulas";
  using A = const Assignment&;
  using HC = HalfConvention;
  auto N = [] { return range("n", 1, 25); };

  out.push_back(float_identity(
      "t1-1.23", S, anchor, 1e-12, {branch({})},
      [](A) -> SequenceValue {
        auto term = [](long k) -> SeriesTerm { return H(k) / Q(2).pow(k); };
        auto tail = [](long K) -> double { return K < 1 ? INFINITY : 1.01 * (K + 1) * std::ldexp(1.0, 1 - static_cast<int>(K)); };
        return sum_series(term, tail, {detail::kSeriesTolerance, 0});
      },
      [](A) -> SequenceValue { return CertifiedReal{2, 0} * detail::ln2(); }));

  out.push_back(exact_identity(
      "t1-1.41", S, anchor, {branch({N()})},
      [](A a) -> Q {
        long n = a.i("n");
        return sum(1, n, [&](long k) { return sgn(k - 1) * C(n, k) / Q(k); });
      },
      [](A a) -> Q { return H(a.i("n")); }));

  out.push_back(exact_identity(
      "t1-1.42", S, anchor, {branch({N()})},
      [](A a) -> Q {
        long n = a.i("n");
        return sum(1, n, [&](long k) { return sgn(k - 1) * C(n, k) * H(k); });
      },
      [](A a) -> Q { return fr(1, a.i("n")); }));

  out.push_back(exact_identity(
      "t1-1.44", S, anchor, {branch({N()})},
      [](A a) -> Q {
        long n = a.i("n");
        return sum(1, n, [&](long k) { return sgn(k - 1) * C(n + 1, k + 1) * H(k); });
      },
      [](A a) -> Q { return H(a.i("n")); }));

  // H_k <= k bounds the left tail by sum_{k>=K} 1/(k-1)! <= 2/(K-1)!
  out.push_back(float_identity(
      "t1-2.16", S, anchor, 1e-12, {branch({})},
      [](A) -> SequenceValue {
        auto term = [](long k) -> SeriesTerm { return H(k) / fact(k); };
        auto tail = [](long K) -> double { return K < 2 ? INFINITY : 2 * detail::inv_factorial(K - 1); };
        return sum_series(term, tail, {detail::kSeriesTolerance, 1});
      },
      [](A) -> SequenceValue {
        auto term = [](long k) -> SeriesTerm { return sgn(k - 1) / (fact(k) * Q(k)); };
        auto tail = [](long K) -> double { return 2 * detail::inv_factorial(K); };
        return detail::e_const() * sum_series(term, tail, {detail::kSeriesTolerance, 1});
      }));

  out.push_back(exact_identity(
      "t1-3.2", S, anchor, {branch({N(), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long k) { return C(r - 2 + n - k, n - k) * H(k); });
      },
      [](A a) -> Q { return h(a.i("n"), a.i("r")); }));

  out.push_back(exact_identity(
      "t1-3.36", S, anchor, {branch({N()})},
      [](A a) -> Q {
        long n = a.i("n");
        return Q(2) * sum(1, 2 * n, [&](long k) { return sgn(k) * H(k); });
      },
      [](A a) -> Q { return H(a.i("n")); }));

  {
    auto lhs = [](A a) -> SequenceValue {
      long n = a.i("n");
      return sum(1, n, [&](long k) { return sgn(k) * C(2 * n - 2 * k, n - k) * C(2 * k, k) / Q(k); });
    };
    auto rhs = [](HC conv) {
      return [conv](A a) -> SequenceValue {
        long n = a.i("n");
        return Q(4).pow(n) * (hq(n, fr(1, 2), conv) - C(Q(n) - fr(1, 2), n) * H(n));
      };
    };
    auto id = exact_identity("t1-3.95", S, anchor, {branch({N()})}, lhs, rhs(HC::Default));
    id.alternatives.push_back({"alternative-half", lhs, rhs(HC::Alternative)});
    out.push_back(std::move(id));
  }

  out.push_back(exact_identity(
      "t1-3.100", S, anchor, {branch({N()})},
      [](A a) -> Q {
        long n = a.i("n");
        return sum(1, n, [&](long k) { return sgn(k) * C(n + k, 2 * k) * C(2 * k, k) / Q(k); });
      },
      [](A a) -> Q { return Q(-2) * H(a.i("n")); }));

  out.push_back(exact_identity(
      "t1-3.108", S, anchor, {branch({range("n", 0, 25), range("m", 0, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), m = a.i("m");
        return sum(0, n, [&](long k) { return C(k + m + 1, m) * H(k) + h(m, k + 2); });
      },
      [](A a) -> Q {
        long n = a.i("n"), m = a.i("m");
        return sum(0, m, [&](long k) { return C(k + n + 1, n) * H(k) + h(n, k + 2); });
      }));

  out.push_back(exact_identity(
      "t1-4.3", S, anchor, {branch({N(), sampled("x")})},
      [](A a) -> Q {
        long n = a.i("n");
        const Q& x = a.q("x");
        return sum(1, n, [&](long k) { return sgn(k - 1) * C(n, k) * x.pow(k) * H(k); });
      },
      [](A a) -> Q {
        long n = a.i("n");
        const Q& x = a.q("x");
        return Q(n) * (Q(1) - x).pow(n - 1) +
               sum(1, n, [&](long k) { return C(n, k) * (x - k).pow(k) * (Q(1) - x + k).pow(n - k) / Q(k); });
      }));

  out.push_back(exact_identity(
      "t1-6.19", S, anchor, {branch({N(), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(0, n, [&](long k) { return C(n, k) * C(r, k) * h(n + r, 1 - k); });
      },
      [](A a) -> Q { return H(a.i("n")) + H(a.i("r")); }));

  out.push_back(exact_identity(
      "t1-6.22", S, anchor, {branch({N()})},
      [](A a) -> Q {
        long n = a.i("n");
        return sum(1, n, [&](long k) { return sgn(k) * C(2 * n, k) * C(2 * n - k, n).pow(2) / Q(k); });
      },
      [](A a) -> Q {
        long n = a.i("n");
        return C(2 * n, n) * (h(n, n + 1) - C(2 * n, n) * H(n));
      }));

  out.push_back(exact_identity(
      "t1-7.2", S, anchor, {branch({N(), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long k) { return C(n, k) * C(r, k) * H(k); });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return C(r + n, n) * H(n) - h(n, r + 1);
      }));

  {
    auto lhs = [](A a) -> SequenceValue {
      long n = a.i("n");
      return sum(1, n, [&](long k) {
        return sgn(k) * C(n, k) / C(2 * k, k) * Q(4).pow(k) / Q(2 * k + 1) * H(k);
      });
    };
    auto rhs = [](HC conv) {
      return [conv](A a) -> SequenceValue {
        long n = a.i("n");
        return Q(4).pow(n) / Q(2 * n + 1) / C(2 * n, n) * hq(n, fr(1, 2), conv);
      };
    };
    auto id = exact_identity("t1-7.9", S, anchor, {branch({N()})}, lhs, rhs(HC::Default));
    id.alternatives.push_back({"alternative-half", lhs, rhs(HC::Alternative)});
    out.push_back(std::move(id));
  }

  out.push_back(exact_identity(
      "t1-7.13", S, anchor, {branch({N()})},
      [](A a) -> Q {
        long n = a.i("n");
        return sum(1, n, [&](long k) { return sgn(k - 1) * C(n, k) * C(2 * n - k, n - k) * H(k); });
      },
      [](A a) -> Q {
        long n = a.i("n");
        return sum(1, n, [&](long k) { return C(n, k).pow(2) / Q(k); });
      }));

  out.push_back(exact_identity(
      "t1-7.15", S, anchor, {branch({N(), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long k) { return C(n, k) * C(r, k) * (H(k).pow(2) + Hm(k, 2)); });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        Q b = C(r + n, n);
        return b * (Hm(n, 2) - Hm(n + r, 2) + Hm(r, 2)) + (b * H(n) - h(n, r + 1)) * (H(n) - H(n + r) + H(r));
      }));

  out.push_back(exact_identity(
      "t1-12.9a", S, anchor, {branch({range("n", 0, 25), sampled("x")})},
      [](A a) -> Q {
        long n = a.i("n");
        const Q& x = a.q("x");
        return sum(0, n, [&](long k) {
          Q big = C(x + (k + 1 + n), n);
          Q d = x + (k + 1);
          return C(n, k) / C(x + k, k) / big *
                 ((x + (2 * k + 1)) / d * (H(k) - hq(n, x + (k + 2)) / big) - Q(k) / d.pow(2));
        });
      },
      [](A) -> Q { return 0; }));

  out.push_back(exact_identity(
      "t1-12.9b", S, anchor, {branch({range("n", 0, 25), sampled("y")})},
      [](A a) -> Q {
        long n = a.i("n");
        const Q& y = a.q("y");
        return sum(0, n, [&](long k) {
          Q big = C(y + (k + 1 + n), n);
          Q d = y + (k + 1);
          return C(n, k) * C(y + k, k) / big *
                 ((y + (2 * k + 1)) / d * (H(k) + hq(n, y + (k + 2)) / big) - Q(k) / d.pow(2));
        });
      },
      [](A a) -> Q { return H(a.i("n")); }));

  {
    auto lhs = [](A a) -> SequenceValue { return H(2 * a.i("n")); };
    auto rhs = [](HC conv) {
      return [conv](A a) -> SequenceValue {
        long n = a.i("n");
        return Q(4).pow(n) / C(2 * n, n) * (C(Q(n) - fr(1, 2), n) * H(n) + hq(n, fr(1, 2), conv));
      };
    };
    auto id = exact_identity("t1-Z.58", S, anchor, {branch({N()})}, lhs, rhs(HC::Default));
    id.alternatives.push_back({"alternative-half", lhs, rhs(HC::Alternative)});
    out.push_back(std::move(id));
  }
}

inline void register_table2(std::vector<Identity>& out) {
  const std::string S = "table2";
  const std::string anchor = "generalized version of the equations in the first";
  using A = const Assignment&;
  using HC = HalfConvention;
  auto N = [] { return range("n", 1, 25); };
  auto R = [] { return range("r", 1, 25); };
  // 1 / C(r-1+k, k)
  auto ic = [](long r, long k) { return C(r - 1 + k, k).reciprocal(); };

  out.push_back(float_identity(
      "t2-1.23", S, anchor, 1e-9, {branch({range("r", 1, 8)})},
      [](A a) -> SequenceValue { return detail::hyperharmonic_over_powers_of_two(a.i("r")); },
      [](A a) -> SequenceValue {
        return CertifiedReal{std::ldexp(1.0, static_cast<int>(a.i("r"))), 0} * detail::ln2();
      }));

  out.push_back(exact_identity(
      "t2-1.41", S, anchor, {branch({N(), R()})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long k) { return sgn(k - 1) * C(n, k) * Q(k) / Q(k + r - 1).pow(2); });
      },
      [=](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return h(n, r) * ic(r, n).pow(2);
      }));

  out.push_back(exact_identity(
      "t2-1.42", S, anchor, {branch({N(), R()})},
      [=](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long k) { return sgn(k - 1) * C(n, k) * ic(r, k).pow(2) * h(k, r); });
      },
      [](A a) -> Q { return fr(1, a.i("n") + a.i("r") - 1); }));

  out.push_back(exact_identity(
      "t2-1.44", S, anchor, {branch({N(), R()})},
      [=](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long k) { return sgn(k - 1) * C(n + 1, k + 1) * ic(r, k).pow(2) * h(k, r); });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long k) { return Q(k) / Q(k + r - 1).pow(2); });
      }));

  // h_k^(r) / C(r-1+k, k)^2 <= H_{k+r-1} <= k + r, so the left tail is at most
  // 2/(K-1)! + 2r/K!; the right side alternates with terms below 1/k!.
  out.push_back(float_identity(
      "t2-2.16", S, anchor, 1e-9, {branch({range("r", 1, 8)})},
      [=](A a) -> SequenceValue {
        long r = a.i("r");
        auto term = [=](long k) -> SeriesTerm { return ic(r, k).pow(2) * h(k, r) / fact(k); };
        auto tail = [r](long K) -> double {
          return K < 2 ? INFINITY : 2 * detail::inv_factorial(K - 1) + 2.0 * r * detail::inv_factorial(K);
        };
        return sum_series(term, tail, {detail::kSeriesTolerance, 1});
      },
      [](A a) -> SequenceValue { return detail::e_times_alternating(a.i("r"), 0, 0); }));

  // The printed right side h_n^(r+n+1) is kept as a second reading; the
  // default reading uses h_n^(2r+1), the order the left side actually produces.
  {
    auto lhs = [](A a) -> SequenceValue {
      long n = a.i("n"), r = a.i("r");
      return sum(1, n, [&](long k) { return C(r + n - k, n - k) * h(k, r); });
    };
    auto id = exact_identity("t2-3.2", S, anchor, {branch({N(), R()})}, lhs,
                             [](A a) -> SequenceValue { return h(a.i("n"), 2 * a.i("r") + 1); });
    id.alternatives.push_back(
        {"as-printed", lhs, [](A a) -> SequenceValue {
           long n = a.i("n"), r = a.i("r");
           return h(n, r + n + 1);
         }});
    out.push_back(std::move(id));
  }

  out.push_back(exact_identity(
      "t2-3.36", S, anchor, {branch({N(), R()})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return Q(2) * sum(1, 2 * n, [&](long k) { return sgn(k) * C(r - 1 + 2 * n - k, 2 * n - k) * h(k, r); });
      },
      [](A a) -> Q { return h(a.i("n"), a.i("r")); }));

  {
    auto lhs = [](A a) -> SequenceValue {
      long n = a.i("n"), r = a.i("r");
      return sum(1, n, [&](long k) {
        return sgn(k) * C(2 * n - 2 * k, n - k) * C(2 * k, k) * Q(k) / Q(r - 1 + k).pow(2);
      });
    };
    auto rhs = [](HC conv) {
      return [conv](A a) -> SequenceValue {
        long n = a.i("n"), r = a.i("r");
        Q b = C(r - 1 + n, n);
        return Q(4).pow(n) / b *
               (hq(n, Q(r) - fr(1, 2), conv) - C(Q(r + n) - fr(3, 2), n) / b * h(n, r));
      };
    };
    auto id = exact_identity("t2-3.95", S, anchor, {branch({N(), R()})}, lhs, rhs(HC::Default));
    id.alternatives.push_back({"alternative-half", lhs, rhs(HC::Alternative)});
    out.push_back(std::move(id));
  }

  // stated for r > 1 only
  out.push_back(exact_identity(
      "t2-3.100", S, anchor, {branch({N(), range("r", 2, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long k) { return sgn(k) * C(n + k, 2 * k) * C(2 * k, k) * Q(k) / Q(r - 1 + k).pow(2); });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        Q b = C(r - 1 + n, n);
        return sgn(n) / b * (h(n, r - n - 1) - C(r - 2, n) / b * h(n, r));
      }));

  out.push_back(exact_identity(
      "t2-3.108", S, anchor, {branch({range("n", 0, 25), range("m", 0, 25), R()})},
      [](A a) -> Q {
        long n = a.i("n"), m = a.i("m"), r = a.i("r");
        return sum(0, n, [&](long k) { return C(k + r + m, m) * h(k, r) + C(k + r - 1, k) * h(m, k + r + 1); });
      },
      [](A a) -> Q {
        long n = a.i("n"), m = a.i("m"), r = a.i("r");
        return sum(0, m, [&](long k) { return C(k + r + n, n) * h(k, r) + C(k + r - 1, k) * h(n, k + r + 1); });
      }));

  out.push_back(exact_identity(
      "t2-4.3", S, anchor, {branch({N(), R(), sampled("x")})},
      [=](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        Q xr = a.q("x") + (r - 1);
        return sum(1, n, [&](long k) {
          return sgn(k) * C(n, k) * xr.pow(k - 1) * ic(r, k) * (Q(k) - xr * ic(r, k) * h(k, r));
        });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        const Q& x = a.q("x");
        return sum(1, n, [&](long k) {
          return C(n, k) * (x - k).pow(k) * (Q(1) - x + k).pow(n - k) * Q(k) / Q(r - 1 + k).pow(2);
        });
      }));

  out.push_back(exact_identity(
      "t2-6.19", S, anchor, {branch({range("n", 0, 25), range("r", 0, 25), range("j", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r"), j = a.i("j");
        return sum(0, n, [&](long k) { return C(n, k) * C(r, k) * h(n + r, j - k); });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r"), j = a.i("j");
        return h(r, j) * C(n + j - 1, n) + C(r + j - 1, r) * h(n, j);
      }));

  out.push_back(exact_identity(
      "t2-6.22", S, anchor, {branch({N(), R()})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long k) {
          return sgn(k) * C(2 * n, k) * C(2 * n - k, n).pow(2) * Q(k) / Q(r - 1 + k).pow(2);
        });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        Q b = C(r - 1 + n, n);
        return C(2 * n, n) / b * (h(n, n + r) - C(2 * n + r - 1, n) / b * h(n, r));
      }));

  out.push_back(exact_identity(
      "t2-7.2", S, anchor, {branch({N(), R(), range("m", 0, 25)})},
      [=](A a) -> Q {
        long n = a.i("n"), r = a.i("r"), m = a.i("m");
        return sum(1, n, [&](long k) { return C(n, k) * C(m, k) * ic(r, k).pow(2) * h(k, r); });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r"), m = a.i("m");
        Q b = C(r - 1 + n, n);
        return (C(r - 1 + m + n, n) / b * h(n, r) - h(n, m + r)) / b;
      }));

  {
    auto lhs = [](A a) -> SequenceValue {
      long n = a.i("n"), r = a.i("r");
      return sum(1, n, [&](long k) {
        return sgn(k) * C(n, k) / C(2 * k, k) * Q(4).pow(k) / Q(2 * k + 1) * h(k, r);
      });
    };
    auto rhs = [](HC conv) {
      return [conv](A a) -> SequenceValue {
        long n = a.i("n"), r = a.i("r");
        return Q(4).pow(n) / Q(2 * n + 1) / C(2 * n, n) * hq(n, Q(r) - fr(1, 2), conv);
      };
    };
    auto id = exact_identity("t2-7.9", S, anchor, {branch({N(), R()})}, lhs, rhs(HC::Default));
    id.alternatives.push_back({"alternative-half", lhs, rhs(HC::Alternative)});
    out.push_back(std::move(id));
  }

  out.push_back(exact_identity(
      "t2-7.13", S, anchor, {branch({N(), range("j", 1, 25)})},
      [=](A a) -> Q {
        long n = a.i("n"), j = a.i("j");
        return sum(1, n, [&](long k) { return C(n, k) * C(-n - 1, n - k) * ic(j, k).pow(2) * h(k, j); });
      },
      [](A a) -> Q {
        long n = a.i("n"), j = a.i("j");
        return sgn(n + 1) * sum(1, n, [&](long k) { return C(n, k).pow(2) * Q(k) / Q(k + j - 1).pow(2); });
      }));

  // d/dj of the terminating 2F1(-N, 1/2; n+j+r; 4) at j = 0 against the printed sum
  for (long extra : {0L, 1L}) {
    out.push_back(exact_identity(
        extra == 0 ? "t2-7.29" : "t2-7.30", S, anchor, {branch({range("n", 0, 25), R()})},
        [extra](A a) -> Q {
          long n = a.i("n"), r = a.i("r");
          return hypergeometric_terminating_dlower(-(2 * n + extra), fr(1, 2), Q(n + r), Q(4));
        },
        [=](A a) -> Q {
          long n = a.i("n"), r = a.i("r"), top = 2 * n + extra;
          return sum(0, top, [&](long k) {
            return sgn(k + 1) * C(top, k) * C(2 * k, k) * ic(n + r, k).pow(2) * h(k, n + r);
          });
        }));
  }

  out.push_back(exact_identity(
      "t2-12.9a", S, anchor, {branch({range("n", 0, 25), R(), sampled("x")})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        const Q& x = a.q("x");
        return sum(0, n, [&](long k) {
          Q big = C(x + (r + k + n), n);
          Q d = x + (r + k);
          Q w = (x + (r + 2 * k)) / d;
          Q cr = C(r - 1 + k, k);
          return C(n, k) / C(x + k, k) / big * cr *
                 (w * h(k, r) / cr - w * hq(n, x + (k + r + 1)) / big - Q(k) / d.pow(2));
        });
      },
      [](A) -> Q { return 0; }));

  out.push_back(exact_identity(
      "t2-12.9b", S, anchor, {branch({range("n", 0, 25), R(), sampled("y")})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        const Q& y = a.q("y");
        return sum(0, n, [&](long k) {
          Q big = C(y + (r + k + n), n);
          Q d = y + (r + k);
          Q w = (y + (r + 2 * k)) / d;
          Q cr = C(r - 1 + k, k);
          return C(n, k) * C(y + k, k) / big / cr *
                 (w * h(k, r) / cr + w * hq(n, y + (k + r + 1)) / big + Q(k) / d.pow(2));
        });
      },
      [=](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return h(n, r) * ic(r, n).pow(2);
      }));

  {
    auto lhs = [](A a) -> SequenceValue {
      long n = a.i("n"), r = a.i("r");
      return C(2 * n, n) * h(2 * n, 2 * r - 1);
    };
    auto rhs = [](HC conv) {
      return [conv](A a) -> SequenceValue {
        long n = a.i("n"), r = a.i("r");
        return Q(4).pow(n) *
               (C(Q(n + r) - fr(3, 2), n) * h(n, r) + C(n + r - 1, n) * hq(n, Q(r) - fr(1, 2), conv));
      };
    };
    auto id = exact_identity("t2-Z.58", S, anchor, {branch({N(), R()})}, lhs, rhs(HC::Default));
    id.alternatives.push_back({"alternative-half", lhs, rhs(HC::Alternative)});
    out.push_back(std::move(id));
  }
}

}  // namespace hyperseq::rows

#endif  // HYPERSEQ_IDENTITIES_REGISTRY_TABLES_HPP
