#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pellredei/bigint.hpp"

namespace pellredei {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Structural equality is therefore value equality.
class BigRational {
 public:
  BigRational() : den_(1) {}
  BigRational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  BigRational(int value) : num_(value), den_(1) {}                 // NOLINT(google-explicit-constructor)
  BigRational(long value) : num_(value), den_(1) {}                // NOLINT(google-explicit-constructor)
  /// Throws DomainError when den is zero.
  BigRational(BigInt num, BigInt den);

  /// Accepts "p" or "p/q" with decimal integers p, q and q != 0.
  static BigRational parse(std::string_view text);

  [[nodiscard]] const BigInt& num() const { return num_; }
  [[nodiscard]] const BigInt& den() const { return den_; }
  [[nodiscard]] int sign() const { return num_.sign(); }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_integer() const { return den_ == BigInt(1); }
  /// Throws DomainError on zero.
  [[nodiscard]] BigRational reciprocal() const;
  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(BigRational a) {
    a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const BigRational&, const BigRational&) = default;
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

  friend std::ostream& operator<<(std::ostream& os, const BigRational& v);

 private:
  struct Reduced {};
  BigRational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

[[nodiscard]] BigRational pow(const BigRational& base, unsigned long exponent);

}  // namespace pellredei
