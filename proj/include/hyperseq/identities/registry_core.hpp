#ifndef HYPERSEQ_IDENTITIES_REGISTRY_CORE_HPP
#define HYPERSEQ_IDENTITIES_REGISTRY_CORE_HPP

// Exact identities for harmonic, hyperharmonic and Fibonacci numbers.

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "hyperseq/identities/helpers.hpp"

namespace hyperseq::rows {

namespace detail {

// Test functions for the product rule, indexed by the "f" parameter.
inline Q product_rule_function(long which, long t) {
  switch (which) {
    case 1: return H(t);
    case 2: return F(t);
    case 3: return h(t, 2);
    case 4: return fr(1, t + 1);
    default: return Q(t).pow(3) - Q(2 * t) + fr(1, 2);
  }
}

inline TermOracle oracle(std::function<ExactRational(long)> f) { return TermOracle{std::move(f), 0}; }

inline std::vector<Q> run(long from, long count) {
  std::vector<Q> v;
  for (long i = 0; i < count; ++i) v.emplace_back(from + i);
  return v;
}

inline const PowerSeries& cached_gf_hyperharmonic(long r, long order) {
  thread_local std::map<std::pair<long, long>, PowerSeries> cache;
  auto key = std::make_pair(r, order);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gf_hyperharmonic(r, order)).first;
  return it->second;
}

inline const PowerSeries& cached_gf(char kind, long r, long order) {
  thread_local std::map<std::tuple<char, long, long>, PowerSeries> cache;
  auto key = std::make_tuple(kind, r, order);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, kind == 'a' ? gf_alpha(r, order) : gf_beta(r, order)).first;
  return it->second;
}

}  // namespace detail

inline void register_core(std::vector<Identity>& out) {
  const std::string S = "core";
  using A = const Assignment&;

  // ---- symmetric identity and recurrences ----
  out.push_back(exact_identity(
      "prop-5", S, "balance between the upper and",
      {branch({range("n", 1, 25), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return sum(1, n, [&](long s) { return h(s, r - 1); }) - sum(1, r, [&](long k) { return h(n - 1, k); });
      },
      [](A a) -> Q { return fr(1, a.i("n")); }));

  out.push_back(exact_identity(
      "rem-bgg", S, "already obtained in",
      {branch({part(1), range("n", 1, 25), range("r", 1, 25)}),
       branch({part(2), range("n", 1, 25), range("r", 1, 25), range("s", 1, 10)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        if (a.i("part") == 1) return h(n, r);
        long s = a.i("s");
        return h(n, r + s) - h(n, s);
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        long s = a.i("part") == 1 ? 0 : a.i("s");
        Q tail = sum(1, r, [&](long k) { return h(n - 1, k + s); });
        return a.i("part") == 1 ? tail + fr(1, n) : tail;
      }));

  out.push_back(exact_identity(
      "eq-8", S, "recurrence with respect to the lower",
      {branch({range("n", 1, 25), range("r", 0, 25)})},
      [](A a) -> Q { return h(a.i("n"), a.i("r") + 1); },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return alpha(n, r) * h(n - 1, r + 1) + beta(n, r);
      }));

  out.push_back(exact_identity(
      "eq-9", S, "recurrence with respect to the upper",
      {branch({range("n", 1, 25), range("r", 0, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return (alpha(n, r) - 1) * h(n, r + 1);
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return alpha(n, r) * h(n, r) - beta(n, r);
      }));

  // part 1: alpha symmetry, 2: beta symmetry, 3: beta generating function, 4: alpha generating function
  out.push_back(exact_identity(
      "rem-alpha-beta", S, "we have the ordinary generating function of",
      {branch({part(1), range("n", 1, 25), range("r", 1, 25)}),
       branch({part(2), range("n", 1, 25), range("r", 1, 25)}),
       branch({part(3), range("k", 0, 25), range("r", 1, 25)}),
       branch({part(4), range("k", 1, 25), range("r", 1, 25)})},
      [](A a) -> Q {
        long r = a.i("r");
        switch (a.i("part")) {
          case 1: return alpha(a.i("n"), r);
          case 2: return beta(a.i("n"), r);
          case 3: {
            long k = a.i("k");
            return detail::cached_gf('b', r, std::max(k, 25L)).coefficient(k);
          }
          default: {
            long k = a.i("k");
            return detail::cached_gf('a', r, std::max(k, 25L)).coefficient(k);
          }
        }
      },
      [](A a) -> Q {
        long r = a.i("r");
        switch (a.i("part")) {
          case 1: {
            long n = a.i("n");
            return fr(r, n) * alpha(r, n);
          }
          case 2: return beta(r, a.i("n"));
          case 3: return beta(a.i("k"), r);
          default: return alpha(a.i("k"), r);
        }
      }));

  out.push_back(exact_identity(
      "prop-bt", S, "closed form evaluation for the",
      {branch({part(1), range("n", 1, 25), range("r", 1, 25)}),
       branch({part(2), range("n", 0, 25), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        if (a.i("part") == 1) return sum(0, n, [&](long k) { return beta(k, r); });
        return sum(0, n, [&](long k) { return C(k + r, r) / Q(k + r); });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        if (a.i("part") == 1) {
          Q al = alpha(n, r), be = beta(n, r);
          return al * be / (al - 1);
        }
        return fr(1, r) * C(n + r, n);
      }));

  out.push_back(exact_identity(
      "prop-falling", S, "considering the concept of",
      {branch({range("n", 0, 25), range("m", 1, 25), range("r", 1, 25)},
              [](A a) { return a.i("m") <= a.i("r"); })},
      [](A a) -> Q {
        long n = a.i("n"), m = a.i("m"), r = a.i("r");
        return sum(0, n, [&](long k) { return C(k + r, r) / falling_factorial(k + r, m); });
      },
      [](A a) -> Q {
        long n = a.i("n"), m = a.i("m"), r = a.i("r");
        return C(n + r - m + 1, n) / falling_factorial(r, m);
      }));

  // ---- derivative operator ----
  out.push_back(exact_identity(
      "eq-10", S, "connection between analysis and combinatorics",
      {branch({range("n", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n");
        auto f = detail::run(1, n);
        return derivative_at_zero_linear_factors(f, fact(n));
      },
      [](A a) -> Q { return H(a.i("n")); }));

  out.push_back(exact_identity(
      "eq-Dgh", S, "For any $m$, $n\\in\\mathbb{N}$ we have",
      {branch({range("n", 1, 25), range("m", 1, 10)})},
      [](A a) -> Q {
        long n = a.i("n"), m = a.i("m");
        auto f = leaping_factors(n, m);
        return derivative_at_zero_linear_factors(f, fact(n).pow(m));
      },
      [](A a) -> Q { return Hm(a.i("n"), a.i("m")); }));

  out.push_back(exact_identity(
      "prop-leap-rel", S, "Relation between the classical binomial",
      {branch({range("n", 2, 25), range("m", 1, 10), sampled("x")},
              [](A a) {
                long n = a.i("n"), m = a.i("m"), p = 1;
                for (long i = 0; i < m && p <= kMemoCap; ++i) p *= n;
                return p <= kMemoCap;
              })},
      [](A a) -> Q { return leaping_binomial(a.q("x"), a.i("n"), a.i("m")); },
      [](A a) -> Q {
        long n = a.i("n"), m = a.i("m");
        const Q& x = a.q("x");
        auto pw = [m](long i) { return Q(i).pow(m).to_long(); };
        long top = pw(n);
        Q numer = fact(top) / fact(n).pow(m) * C(x + top, top);
        Q denom = 1;
        for (long i = 2; i <= n; ++i) {
          long gap = pw(i) - pw(i - 1) - 1;
          denom *= C(x + (pw(i) - 1), gap) * fact(gap);
        }
        return numer / denom;
      }));

  out.push_back(exact_identity(
      "eq-11", S, "Let $n\\in\\mathbb{N\\cup}\\left\\{ 0\\right\\} $ and $r\\in\\mathbb{N}$. Then",
      {branch({range("n", 1, 25), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        auto f = detail::run(r, n);
        return derivative_at_zero_linear_factors(f, fact(n));
      },
      [](A a) -> Q { return h(a.i("n"), a.i("r")); }));

  // D_z z^(rising n) = z^(rising n) (psi(z+n) - psi(z)), with the psi difference telescoped
  out.push_back(exact_identity(
      "eq-pd", S, "turns out to be",
      {branch({range("n", 1, 25), sampled("z")})},
      [](A a) -> Q {
        long n = a.i("n");
        const Q& z = a.q("z");
        std::vector<Q> f;
        for (long i = 0; i < n; ++i) f.push_back(z + i);
        return expand_linear_factors(f)[1];
      },
      [](A a) -> Q {
        long n = a.i("n");
        const Q& z = a.q("z");
        Q psi_diff = 0;
        for (long i = 0; i < n; ++i) psi_diff += (z + i).reciprocal();
        return rising_factorial(z, n) * psi_diff;
      }));

  // part 1: the binomial sum itself; part 2: its x-derivative at 0
  out.push_back(exact_identity(
      "eq-13", S, "Let us recall the following binomial equation",
      {branch({part(1), range("n", 0, 25), range("r", 1, 25), sampled("x")}),
       branch({part(2), range("n", 1, 25), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        if (a.i("part") == 2) return (alpha(n, r) - 1) * h(n - 1, r + 1);
        const Q& x = a.q("x");
        return sum(0, n, [&](long j) { return C(x + (j + r - 1), j); });
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        if (a.i("part") == 2) return h(n, r) - beta(n, r);
        const Q& x = a.q("x");
        return (Q(1) + Q(n) / (x + r)) * C(x + (n + r - 1), n);
      }));

  out.push_back(exact_identity(
      "gf-harmonic", S, "generating functions of harmonic and hyperharmonic",
      {branch({range("n", 0, 64)})},
      [](A a) -> Q {
        long n = a.i("n");
        return detail::cached_gf_hyperharmonic(1, std::max(n, 64L)).coefficient(n);
      },
      [](A a) -> Q { return H(a.i("n")); }));

  out.push_back(exact_identity(
      "gf-hyperharmonic", S, "generating functions of harmonic and hyperharmonic",
      {branch({range("n", 0, 64), range("r", 1, 8)})},
      [](A a) -> Q {
        long n = a.i("n");
        return detail::cached_gf_hyperharmonic(a.i("r"), std::max(n, 64L)).coefficient(n);
      },
      [](A a) -> Q { return h(a.i("n"), a.i("r")); }));

  out.push_back(exact_identity(
      "eq-A1", S, "In a similar fashion one",
      {branch({range("n", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n");
        auto f = detail::run(1, n);
        return derivative_at_zero_reciprocal(f, fact(n));
      },
      [](A a) -> Q { return -H(a.i("n")); }));

  out.push_back(exact_identity(
      "eq-A2", S, "In a similar fashion one",
      {branch({range("n", 1, 25), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        auto f = detail::run(r, n);
        return derivative_at_zero_reciprocal(f, fact(n));
      },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return -C(r - 1 + n, n).pow(-2) * h(n, r);
      }));

  out.push_back(exact_identity(
      "eq-A3", S, "In a similar fashion one",
      {branch({range("n", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n");
        std::vector<Q> f;
        for (long i = 1; i <= n; ++i) f.emplace_back(-i);
        return derivative_at_zero_linear_factors(f, fact(n));
      },
      [](A a) -> Q {
        long n = a.i("n");
        return sgn(n + 1) * H(n);
      }));

  // ---- difference operator on harmonic numbers ----
  {
    std::vector<Branch> domain;
    for (long f = 1; f <= 5; ++f)
      domain.push_back(branch({ParamDecl::fixed("f", f), range("n", 1, 12), range("x", 0, 12)}));
    out.push_back(exact_identity(
        "prop-teo4", S, "\\Delta^{n}\\left( xf\\left( x\\right) \\right) =x\\Delta^{n}f\\left( x\\right)", std::move(domain),
        [](A a) -> Q {
          long which = a.i("f");
          auto g = detail::oracle([which](long t) { return Q(t) * detail::product_rule_function(which, t); });
          return forward_difference(g, a.i("n"), a.i("x"));
        },
        [](A a) -> Q {
          long which = a.i("f"), n = a.i("n"), x = a.i("x");
          auto f = detail::oracle([which](long t) { return detail::product_rule_function(which, t); });
          return Q(x) * forward_difference(f, n, x) + Q(n) * forward_difference(f, n - 1, x + 1);
        }));
  }

  out.push_back(exact_identity(
      "prop-son1", S, "\\sum_{i=0}^{k}\\left( -1\\right) ^{i+1}\\binom{k}{i}H_{n+i}",
      {branch({range("k", 1, 25), range("n", 0, 25)})},
      [](A a) -> Q {
        long k = a.i("k"), n = a.i("n");
        return sum(0, k, [&](long i) { return sgn(i + 1) * C(k, i) * H(n + i); });
      },
      [](A a) -> Q {
        long k = a.i("k"), n = a.i("n");
        return fact(k - 1) / rising_factorial(n + 1, k);
      }));

  out.push_back(exact_identity(
      "cor-son4", S, "following well-known equation",
      {branch({range("k", 1, 25)})},
      [](A a) -> Q {
        long k = a.i("k");
        return sum(1, k, [&](long i) { return sgn(i + 1) * C(k, i) * H(i); });
      },
      [](A a) -> Q { return fr(1, a.i("k")); }));

  // part 1: the alternating sum; part 2: the binomial transform of b_k = (-1)^(k+1)/k
  out.push_back(exact_identity(
      "eq-hrp", S, "we have the well-known formula",
      {branch({part(1), range("k", 1, 25)}), branch({part(2), range("k", 0, 25)})},
      [](A a) -> Q {
        long k = a.i("k");
        if (a.i("part") == 1) return sum(1, k, [&](long i) { return sgn(i + 1) * C(k, i) / Q(i); });
        std::vector<Q> b{Q(0)};
        for (long i = 1; i <= k; ++i) b.push_back(sgn(i + 1) / Q(i));
        return binomial_transform(b)[k];
      },
      [](A a) -> Q { return H(a.i("k")); }));

  out.push_back(exact_identity(
      "prop-son8", S, "binomial sum of harmonic numbers",
      {branch({range("k", 2, 25), range("n", 0, 25)})},
      [](A a) -> Q {
        long k = a.i("k"), n = a.i("n");
        return sum(0, k, [&](long i) { return sgn(i) * C(k, i) * Q(n + i) * H(n + i); });
      },
      [](A a) -> Q {
        long k = a.i("k"), n = a.i("n");
        return fact(k - 2) / rising_factorial(n + 1, k - 1);
      }));

  out.push_back(exact_identity(
      "cor-bih", S, "This identity is known",
      {branch({range("k", 2, 25)})},
      [](A a) -> Q {
        long k = a.i("k");
        return sum(1, k, [&](long i) { return sgn(i) * C(k, i) * Q(i) * H(i); });
      },
      [](A a) -> Q { return fr(1, a.i("k") - 1); }));

  out.push_back(exact_identity(
      "rem-kHk", S, "k\\left( H_{k}-1\\right)",
      {branch({range("k", 1, 25)})},
      [](A a) -> Q {
        long k = a.i("k");
        return Q(k) * (H(k) - 1);
      },
      [](A a) -> Q {
        long k = a.i("k");
        return sum(2, k, [&](long i) { return C(k, i) * sgn(i) / Q(i - 1); });
      }));

  out.push_back(exact_identity(
      "cor-w", S, "alternate sum of harmonic numbers",
      {branch({range("n", 1, 30)})},
      [](A a) -> Q {
        long n = a.i("n");
        return sum(1, n - 1, [&](long i) { return sgn(i + 1) * C(n + 1, i + 1) * H(i); });
      },
      [](A a) -> Q {
        long n = a.i("n");
        return n % 2 == 0 ? Q(2) * H(n) : Q(0);
      }));

  // ---- difference operator on hyperharmonic numbers ----
  // For orders <= 0 the piecewise definition only continues the recurrence
  // where its nonzero branch applies on both sides (n >= 2, n + r >= 2).
  out.push_back(exact_identity(
      "eq-hhr", S, "To obtain lower-ordered hyperharmonic number",
      {branch({range("n", 1, 25), range("r", -25, 25)},
              [](A a) {
                long n = a.i("n"), r = a.i("r");
                return r >= 1 || (n >= 2 && n + r >= 2);
              })},
      [](A a) -> Q { return h(a.i("n"), a.i("r") - 1); },
      [](A a) -> Q {
        long n = a.i("n"), r = a.i("r");
        return h(n, r) - h(n - 1, r);
      }));

  out.push_back(exact_identity(
      "prop-one1-n", S, "Multiple difference of $h_{n}^{\\left( r\\right) }$ with respect",
      {branch({range("n", 0, 25), range("k", 0, 25), range("r", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), k = a.i("k"), r = a.i("r");
        return h(n + k, r - k);
      },
      [](A a) -> Q {
        long n = a.i("n"), k = a.i("k"), r = a.i("r");
        return alt_binomial_sum(k, [&](long i) { return h(n + i, r); });
      }));

  out.push_back(exact_identity(
      "prop-one1-r", S, "and with respect to $r$ gives",
      {branch({range("n", 1, 25), range("k", 1, 25), range("r", 0, 25)}, [](A a) { return a.i("k") <= a.i("n"); })},
      [](A a) -> Q {
        long n = a.i("n"), k = a.i("k"), r = a.i("r");
        return h(n - k, r + k);
      },
      [](A a) -> Q {
        long n = a.i("n"), k = a.i("k"), r = a.i("r");
        return alt_binomial_sum(k, [&](long i) { return h(n, r + i); });
      }));

  out.push_back(exact_identity(
      "cor-hk-shift", S, "h_{n-k}^{\\left( k\\right) }",
      {branch({part(1), range("n", 1, 25), range("k", 1, 25)}, [](A a) { return a.i("k") <= a.i("n"); }),
       branch({part(2), range("k", 1, 25), range("r", 0, 25)})},
      [](A a) -> Q {
        long k = a.i("k");
        if (a.i("part") == 1) return h(a.i("n") - k, k);
        return 0;
      },
      [](A a) -> Q {
        long k = a.i("k");
        if (a.i("part") == 1) {
          long n = a.i("n");
          return alt_binomial_sum(k, [&](long i) { return h(n, i); });
        }
        long r = a.i("r");
        return alt_binomial_sum(k, [&](long i) { return h(k, r + i); });
      }));

  out.push_back(exact_identity(
      "cor-e", S, "new representation for negative-ordered hyperharmonic",
      {branch({range("n", 1, 25), range("k", 1, 25)})},
      [](A a) -> Q {
        long n = a.i("n"), k = a.i("k");
        return h(n + k, -k);
      },
      [](A a) -> Q {
        long n = a.i("n"), k = a.i("k");
        return alt_binomial_sum(k, [&](long i) { return fr(1, n + i); });
      }));

  out.push_back(exact_identity(
      "cor-lower", S, "lower-ordered hyperharmonic numbers",
      {branch({range("k", 1, 25), range("r", 1, 25)})},
      [](A a) -> Q {
        long k = a.i("k"), r = a.i("r");
        return h(k, r - k);
      },
      [](A a) -> Q {
        long k = a.i("k"), r = a.i("r");
        return alt_binomial_sum(k, [&](long i) { return h(i, r); }, 1);
      }));

  out.push_back(exact_identity(
      "cor-recip", S, "For non-negative integer $k$ and $n$ we have",
      {branch({range("k", 0, 25)})},
      [](A a) -> Q { return fr(1, a.i("k") + 1); },
      [](A a) -> Q {
        long k = a.i("k");
        return sum(0, k, [&](long i) { return C(k, i) * h(i + 1, -i); });
      }));

  // part 1: H_n as a binomial sum of h_i^(1-i); part 2: h_{i+1}^(-i) = (-1)^i/(i+1)
  out.push_back(exact_identity(
      "cor-e2", S, "H_{n}= \\dsum \\limits_{i=1}^{n} \\binom{n}{i}h_{i}^{\\left( 1-i\\right) }",
      {branch({part(1), range("n", 1, 25)}), branch({part(2), range("i", 0, 25)})},
      [](A a) -> Q {
        if (a.i("part") == 1) return H(a.i("n"));
        long i = a.i("i");
        return h(i + 1, -i);
      },
      [](A a) -> Q {
        if (a.i("part") == 1) {
          long n = a.i("n");
          return sum(1, n, [&](long i) { return C(n, i) * h(i, 1 - i); });
        }
        long i = a.i("i");
        return sgn(i) / Q(i + 1);
      }));

  // part 1: H_k via h_i^(k+1); part 2: 1/k via h_i^(k)
  out.push_back(exact_identity(
      "rem-Hk-hik", S, "As a result we can state",
      {branch({part(1), range("k", 1, 25)}), branch({part(2), range("k", 1, 25)})},
      [](A a) -> Q {
        long k = a.i("k");
        return a.i("part") == 1 ? H(k) : fr(1, k);
      },
      [](A a) -> Q {
        long k = a.i("k"), shift = a.i("part") == 1 ? 1 : 0;
        return alt_binomial_sum(k, [&](long i) { return h(i, k + shift); }, 1);
      }));

  out.push_back(exact_identity(
      "rem-doublesum", S, "double sum representation for harmonic",
      {branch({range("n", 1, 25)})},
      [](A a) -> Q { return H(a.i("n")); },
      [](A a) -> Q {
        long n = a.i("n");
        return sum(1, n, [&](long k) { return alt_binomial_sum(k, [&](long i) { return h(i, k); }, 1); });
      }));

  // ---- Fibonacci numbers ----
  out.push_back(exact_identity(
      "prop-one2", S, "binomial representations for Fibonacci",
      {branch({range("n", 0, 40), range("k", 0, 40)})},
      [](A a) -> Q { return F(a.i("n") - a.i("k")); },
      [](A a) -> Q {
        long n = a.i("n"), k = a.i("k");
        return alt_binomial_sum(k, [&](long i) { return F(n + i); });
      }));

  out.push_back(exact_identity(
      "cor-nf", S, "as a definition of negative-indexed",
      {branch({range("k", 1, 40)})},
      [](A a) -> Q { return F(-a.i("k")); },
      [](A a) -> Q {
        long k = a.i("k");
        return alt_binomial_sum(k, [&](long i) { return F(i); });
      }));

  out.push_back(exact_identity(
      "cor-son6", S, "F_{-k}=F_{-k-1}+F_{-k-2}",
      {branch({range("k", 0, 40)})},
      [](A a) -> Q { return F(-a.i("k")); },
      [](A a) -> Q {
        long k = a.i("k");
        return F(-k - 1) + F(-k - 2);
      }));

  // the negative side is built from the binomial sum, not from the sign rule
  out.push_back(exact_identity(
      "cor-fib-sign", S, "correspondence between negative- and positive-indexed",
      {branch({range("k", 1, 40)})},
      [](A a) -> Q {
        long k = a.i("k");
        return alt_binomial_sum(k, [&](long i) { return F(i); });
      },
      [](A a) -> Q {
        long k = a.i("k");
        return sgn(k + 1) * F(k);
      }));
}

}  // namespace hyperseq::rows

#endif  // HYPERSEQ_IDENTITIES_REGISTRY_CORE_HPP
