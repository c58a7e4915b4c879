#ifndef HYPERSEQ_EXACTNUM_HPP
#define HYPERSEQ_EXACTNUM_HPP

// Exact rational arithmetic over GMP integers, plus the factorial and
// binomial primitives the rest of the library is built on.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperseq/errors.hpp"

#ifndef HYPERSEQ_MEMO_CAP
#define HYPERSEQ_MEMO_CAP 256
#endif

namespace hyperseq {

using BigInt = mpz_class;

/// Largest argument for which factorials and Pascal rows are precomputed.
inline constexpr long kMemoCap = HYPERSEQ_MEMO_CAP;

/// Reduced fraction with a positive denominator. Zero is always 0/1.
class ExactRational {
 public:
  ExactRational() = default;

  template <std::integral T>
  ExactRational(T value) : q_(mpz_class(static_cast<long>(value))) {}  // NOLINT

  ExactRational(const BigInt& value) : q_(value) {}  // NOLINT

  /// p/q in lowest terms; throws ConstructionError when q == 0.
  static ExactRational make(const BigInt& p, const BigInt& q) {
    if (q == 0) throw ConstructionError("rational with zero denominator");
    ExactRational r;
    r.q_ = mpq_class(p, q);
    r.q_.canonicalize();
    return r;
  }

  /// Parses "p", "p/q", with an optional leading '+' or '-'.
  static ExactRational parse(std::string_view text) {
    auto fail = [&] { return ConstructionError("not a rational: '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    auto digits = [&](std::size_t from) {
      std::size_t end = from;
      while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
      return end;
    };
    std::size_t num_end = digits(pos);
    if (num_end == pos) throw fail();
    BigInt num(std::string(text.substr(pos, num_end - pos)), 10);
    BigInt den = 1;
    if (num_end != text.size()) {
      if (text[num_end] != '/') throw fail();
      std::size_t den_end = digits(num_end + 1);
      if (den_end == num_end + 1 || den_end != text.size()) throw fail();
      den = BigInt(std::string(text.substr(num_end + 1)), 10);
    }
    if (negative) num = -num;
    return make(num, den);
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Integer value; throws DomainError unless is_integer() and it fits in a long.
  long to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
      throw DomainError("rational " + str() + " is not a machine integer");
    return q_.get_num().get_si();
  }

  double to_double() const { return q_.get_d(); }

  /// Canonical text: "p/q", or "p" when the denominator is 1.
  std::string str() const { return q_.get_str(10); }

  ExactRational reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    ExactRational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
  }

  ExactRational abs() const {
    ExactRational r;
    r.q_ = ::abs(q_);
    return r;
  }

  /// Integer power; negative exponents invert (zero base then throws).
  ExactRational pow(long exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    ExactRational r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
  }

  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a) {
    ExactRational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline ExactRational make_rational(const BigInt& p, const BigInt& q) { return ExactRational::make(p, q); }

/// Decimal string with `places` digits after the point, ties rounded to even.
inline std::string to_decimal(const ExactRational& x, int places) {
  if (places < 0) throw DomainError("decimal places must be >= 0");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  BigInt num = abs(x.numerator()) * scale, den = x.denominator();
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  int c = cmp(BigInt(2 * r), den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  std::string digits = q.get_str(10);
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  bool negative = x.sign() < 0 && q != 0;
  return negative ? "-" + digits : digits;
}

/// (-1)^k for any integer k.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

namespace detail {

struct FactorialTable {
  std::vector<BigInt> values;
  FactorialTable() : values(static_cast<std::size_t>(kMemoCap) + 1) {
    values[0] = 1;
    for (long i = 1; i <= kMemoCap; ++i) values[i] = values[i - 1] * i;
  }
};

struct PascalTable {
  // rows[n][k] = C(n, k) for 0 <= k <= n <= kMemoCap
  std::vector<std::vector<BigInt>> rows;
  PascalTable() : rows(static_cast<std::size_t>(kMemoCap) + 1) {
    for (long n = 0; n <= kMemoCap; ++n) {
      auto& row = rows[n];
      row.resize(static_cast<std::size_t>(n) + 1);
      row[0] = 1;
      row[n] = 1;
      for (long k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
  }
};

// Function-local statics: initialised exactly once, read-only afterwards.
inline const FactorialTable& factorial_table() {
  static const FactorialTable table;
  return table;
}

inline const PascalTable& pascal_table() {
  static const PascalTable table;
  return table;
}

}  // namespace detail

inline BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  if (n <= kMemoCap) return detail::factorial_table().values[n];
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// x(x+1)...(x+n-1); 1 when n == 0.
inline ExactRational rising_factorial(const ExactRational& x, long n) {
  if (n < 0) throw DomainError("rising factorial with negative length");
  ExactRational p = 1;
  for (long i = 0; i < n; ++i) p *= x + i;
  return p;
}

/// x(x-1)...(x-n+1); 1 when n == 0.
inline ExactRational falling_factorial(const ExactRational& x, long n) {
  if (n < 0) throw DomainError("falling factorial with negative length");
  ExactRational p = 1;
  for (long i = 0; i < n; ++i) p *= x - i;
  return p;
}

inline BigInt binomial_int(long n, long k);

/// C(x, n) = x^(falling n) / n! for arbitrary rational x.
inline ExactRational binomial_general(const ExactRational& x, long n) {
  if (n < 0) return 0;
  if (x.is_integer() && x.numerator().fits_slong_p()) return binomial_int(x.to_long(), n);
  return falling_factorial(x, n) / ExactRational(factorial(n));
}

/// Integer binomial. Zero for k < 0 and for 0 <= n < k; for negative n the
/// value continues the polynomial C(x, k), i.e. (-1)^k C(k - n - 1, k).
inline BigInt binomial_int(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    if (n <= kMemoCap) return detail::pascal_table().rows[n][k];
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  BigInt r = binomial_int(k - n - 1, k);
  return parity_sign(k) < 0 ? BigInt(-r) : r;
}

/// C(n, k) lifted into the rationals.
inline ExactRational binom(long n, long k) { return ExactRational(binomial_int(n, k)); }

}  // namespace hyperseq

#endif  // HYPERSEQ_EXACTNUM_HPP
