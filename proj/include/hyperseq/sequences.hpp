#ifndef HYPERSEQ_SEQUENCES_HPP
#define HYPERSEQ_SEQUENCES_HPP

// Harmonic-family numbers and Fibonacci numbers.
//
// Memo tables are thread_local: every worker thread owns its own cache, so
// all functions here are safe to call concurrently without locking.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperseq/errors.hpp"
#include "hyperseq/exactnum.hpp"

namespace hyperseq {

/// Five independent ways of computing h_n^(r).
enum class HyperharmonicMethod {
  Def,       // r-fold iterated partial sums
  Closed,    // C(n+r-1, r-1) (H_{n+r-1} - H_{r-1})
  Conv,      // sum_k C(n+r-k-1, r-1) / k
  RecLower,  // recurrence in n, seeded at h_0 = 0
  RecUpper,  // recurrence in r, seeded at h^(1) = H_n
};

inline constexpr HyperharmonicMethod kAllHyperharmonicMethods[] = {
    HyperharmonicMethod::Def, HyperharmonicMethod::Closed, HyperharmonicMethod::Conv,
    HyperharmonicMethod::RecLower, HyperharmonicMethod::RecUpper};

inline std::string_view to_string(HyperharmonicMethod m) {
  switch (m) {
    case HyperharmonicMethod::Def: return "DEF";
    case HyperharmonicMethod::Closed: return "CLOSED";
    case HyperharmonicMethod::Conv: return "CONV";
    case HyperharmonicMethod::RecLower: return "REC_LOWER";
    case HyperharmonicMethod::RecUpper: return "REC_UPPER";
  }
  return "?";
}

inline HyperharmonicMethod parse_hyperharmonic_method(std::string_view name) {
  for (auto m : kAllHyperharmonicMethods)
    if (to_string(m) == name) return m;
  throw ConstructionError("unknown hyperharmonic method '" + std::string(name) + "'");
}

/// H_n = 1 + 1/2 + ... + 1/n; zero for n <= 0.
inline ExactRational harmonic(long n) {
  if (n <= 0) return 0;
  thread_local std::vector<ExactRational> prefix{ExactRational(0)};
  while (static_cast<long>(prefix.size()) <= n) {
    long k = static_cast<long>(prefix.size());
    prefix.push_back(prefix.back() + ExactRational::make(1, k));
  }
  return prefix[n];
}

/// H_n^(m) = sum_{k<=n} 1/k^m for any integer m (m <= 0 gives power sums).
inline ExactRational gen_harmonic(long n, long m) {
  if (n <= 0) return 0;
  if (m == 1) return harmonic(n);
  thread_local std::unordered_map<long, std::vector<ExactRational>> tables;
  auto& prefix = tables[m];
  if (prefix.empty()) prefix.emplace_back(0);
  while (static_cast<long>(prefix.size()) <= n) {
    long k = static_cast<long>(prefix.size());
    prefix.push_back(prefix.back() + ExactRational(k).pow(-m));
  }
  return prefix[n];
}

/// alpha(n, r) = 1 + r/n.
inline ExactRational alpha(long n, long r) {
  if (n < 1) throw DomainError("alpha(n, r) needs n >= 1");
  return ExactRational(1) + ExactRational::make(r, n);
}

/// beta(n, r) = C(n+r, r) / (n+r). Defined whenever n + r >= 1 with n, r >= 0.
inline ExactRational beta(long n, long r) {
  if (n < 0 || r < 0 || n + r < 1) throw DomainError("beta(n, r) needs n, r >= 0 and n + r >= 1");
  return binom(n + r, r) / ExactRational(n + r);
}

namespace detail {

inline ExactRational hyper_closed(long n, long r) {
  return binom(n + r - 1, r - 1) * (harmonic(n + r - 1) - harmonic(r - 1));
}

inline ExactRational hyper_conv(long n, long r) {
  ExactRational s = 0;
  for (long k = 1; k <= n; ++k) s += binom(n + r - k - 1, r - 1) / ExactRational(k);
  return s;
}

inline ExactRational hyper_rec_lower(long n, long r) {
  ExactRational h = 0;  // h_0^(r)
  for (long m = 1; m <= n; ++m) h = alpha(m, r - 1) * h + beta(m, r - 1);
  return h;
}

inline ExactRational hyper_rec_upper(long n, long r) {
  ExactRational h = harmonic(n);  // order 1
  for (long s = 1; s < r; ++s) {
    ExactRational a = alpha(n, s);
    h = (a * h - beta(n, s)) / (a - 1);
  }
  return h;
}

// rows[r][n] = h_n^(r), grown on demand.
struct DefinitionTable {
  std::vector<std::vector<ExactRational>> rows;
  long columns = 0;

  const ExactRational& at(long n, long r) {
    if (n + 1 > columns) {
      columns = std::max(n + 1, 2 * columns);
      rows.clear();
    }
    while (static_cast<long>(rows.size()) <= r) {
      std::vector<ExactRational> row(static_cast<std::size_t>(columns));
      long order = static_cast<long>(rows.size());
      for (long m = 1; m < columns; ++m)
        row[m] = order == 0 ? ExactRational::make(1, m) : row[m - 1] + rows[order - 1][m];
      rows.push_back(std::move(row));
    }
    return rows[r][n];
  }
};

inline ExactRational hyper_def(long n, long r) {
  thread_local DefinitionTable table;
  return table.at(n, r);
}

inline ExactRational hyper_cached_closed(long n, long r) {
  thread_local std::unordered_map<std::uint64_t, ExactRational> cache;
  std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(r);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ExactRational v = hyper_closed(n, r);
  if (cache.size() > (1u << 20)) cache.clear();
  cache.emplace(key, v);
  return v;
}

}  // namespace detail

/// Hyperharmonic number h_n^(r) for n, r >= 0 with h_0^(r) = 0, h_n^(0) = 1/n.
/// (n, r) = (0, 0) has no agreed value and is rejected.
inline ExactRational hyperharmonic(long n, long r,
                                   HyperharmonicMethod method = HyperharmonicMethod::Closed) {
  if (n < 0 || r < 0) throw DomainError("hyperharmonic(n, r) needs n, r >= 0");
  if (r == 0) {
    if (n == 0) throw DomainError("h_0^(0) is undefined");
    return ExactRational::make(1, n);
  }
  if (n == 0) return 0;
  switch (method) {
    case HyperharmonicMethod::Def: return detail::hyper_def(n, r);
    case HyperharmonicMethod::Closed: return detail::hyper_cached_closed(n, r);
    case HyperharmonicMethod::Conv: return detail::hyper_conv(n, r);
    case HyperharmonicMethod::RecLower: return detail::hyper_rec_lower(n, r);
    case HyperharmonicMethod::RecUpper: return detail::hyper_rec_upper(n, r);
  }
  throw DomainError("unknown method");
}

/// Negative-ordered hyperharmonic number h_n^(-r), n, r >= 1.
inline ExactRational hyperharmonic_neg(long n, long r) {
  if (n < 1 || r < 1) throw DomainError("hyperharmonic_neg(n, r) needs n, r >= 1");
  if (n == 1) return 1;
  if (r >= n) return 0;
  return ExactRational(parity_sign(r) * factorial(r)) / falling_factorial(n, r + 1);
}

/// h_n^(order) for any integer order: positive, zero (1/n) or negative.
inline ExactRational hyperharmonic_signed(long n, long order) {
  if (order >= 1) return hyperharmonic(n, order);
  if (n < 1) throw DomainError("h_" + std::to_string(n) + "^(" + std::to_string(order) + ") needs n >= 1");
  if (order == 0) return ExactRational::make(1, n);
  return hyperharmonic_neg(n, -order);
}

/// h_n^(w) for rational w via the hyperharmonic function:
/// C(w+n-1, n) * sum_{i<n} 1/(w+i). Throws at poles w + i = 0.
inline ExactRational hyperharmonic_rational_order(long n, const ExactRational& w) {
  if (n < 0) throw DomainError("hyperharmonic_rational_order needs n >= 0");
  ExactRational s = 0;
  for (long i = 0; i < n; ++i) {
    ExactRational d = w + i;
    if (d.is_zero())
      throw DomainError("pole in h_n^(w): w + i = 0 at i = " + std::to_string(i) + " (w = " + w.str() + ")");
    s += d.reciprocal();
  }
  return binomial_general(w + (n - 1), n) * s;
}

/// F_k with F_0 = 0, F_1 = 1 and F_{-k} = (-1)^(k+1) F_k.
inline BigInt fibonacci(long k) {
  long m = k < 0 ? -k : k;
  BigInt f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  if (k < 0 && parity_sign(m + 1) < 0) f = -f;
  return f;
}

}  // namespace hyperseq

#endif  // HYPERSEQ_SEQUENCES_HPP
