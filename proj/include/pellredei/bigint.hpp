#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace pellredei {

/// Arbitrary precision signed integer.
///
/// Thin value type over a GMP integer. Division and remainder truncate
/// toward zero like the built-in integer types; use floor_div when the
/// floor is wanted.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  BigInt(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(long long v);                // NOLINT(google-explicit-constructor)
  BigInt(unsigned long long v);       // NOLINT(google-explicit-constructor)
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws DomainError on
  /// anything else (including empty input and embedded spaces).
  static BigInt parse(std::string_view text);

  [[nodiscard]] int sign() const { return mpz_sgn(v_.get_mpz_t()); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  /// Number of bits of |*this|; 0 for zero.
  [[nodiscard]] std::size_t bit_length() const;
  /// Number of decimal digits of |*this|; 1 for zero.
  [[nodiscard]] std::size_t decimal_digits() const;
  [[nodiscard]] std::string to_string() const { return v_.get_str(10); }
  [[nodiscard]] bool fits_int64() const;
  /// Throws DomainError when the value does not fit.
  [[nodiscard]] std::int64_t to_int64() const;

  [[nodiscard]] const mpz_class& raw() const { return v_; }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  BigInt& operator/=(const BigInt& o);
  BigInt& operator%=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }

  BigInt& operator<<=(std::size_t bits);
  BigInt& operator>>=(std::size_t bits);  // floor shift
  friend BigInt operator<<(BigInt a, std::size_t bits) { return a <<= bits; }
  friend BigInt operator>>(BigInt a, std::size_t bits) { return a >>= bits; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  mpz_class v_;
};

[[nodiscard]] BigInt abs(const BigInt& v);
[[nodiscard]] BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
[[nodiscard]] BigInt pow(const BigInt& base, unsigned long exponent);
/// floor(a / b); throws DomainError on b == 0.
[[nodiscard]] BigInt floor_div(const BigInt& a, const BigInt& b);

/// floor(sqrt(n)) by integer Newton iteration; throws DomainError for n < 0.
[[nodiscard]] BigInt isqrt(const BigInt& n);
[[nodiscard]] bool is_perfect_square(const BigInt& n);

}  // namespace pellredei
