#pragma once

#include <iosfwd>
#include <string>

#include "pellredei/rational.hpp"

namespace pellredei {

/// The field Q(√d) for a positive nonsquare integer d.
class QuadraticField {
 public:
  /// Throws DomainError for d <= 0 and PerfectSquareError for square d.
  explicit QuadraticField(BigInt d);

  [[nodiscard]] const BigInt& d() const { return d_; }

  friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

 private:
  BigInt d_;
};

class QuadraticElement;

[[nodiscard]] QuadraticElement quad_mul(const QuadraticElement& p, const QuadraticElement& q);
[[nodiscard]] BigRational quad_norm(const QuadraticElement& p);

/// a + b√d. Elements only combine with elements over the same d; mixing
/// fields raises DomainError.
class QuadraticElement {
 public:
  QuadraticElement(const QuadraticField& field, BigRational a, BigRational b = BigRational())
      : a_(std::move(a)), b_(std::move(b)), d_(field.d()) {}

  /// The element √d itself.
  static QuadraticElement sqrt_d(const QuadraticField& field) { return {field, 0, 1}; }

  [[nodiscard]] const BigRational& a() const { return a_; }
  [[nodiscard]] const BigRational& b() const { return b_; }
  [[nodiscard]] const BigInt& d() const { return d_; }
  [[nodiscard]] QuadraticField field() const { return QuadraticField(d_); }

  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
  [[nodiscard]] QuadraticElement conjugate() const { return {a_, -b_, d_}; }
  /// Throws DomainError on zero.
  [[nodiscard]] QuadraticElement inverse() const;
  [[nodiscard]] std::string to_string() const;

  friend QuadraticElement operator+(const QuadraticElement& p, const QuadraticElement& q);
  friend QuadraticElement operator-(const QuadraticElement& p, const QuadraticElement& q);
  friend QuadraticElement operator-(const QuadraticElement& p) { return {-p.a_, -p.b_, p.d_}; }
  friend QuadraticElement operator*(const QuadraticElement& p, const QuadraticElement& q) {
    return quad_mul(p, q);
  }
  friend QuadraticElement operator/(const QuadraticElement& p, const QuadraticElement& q) {
    return quad_mul(p, q.inverse());
  }

  friend bool operator==(const QuadraticElement&, const QuadraticElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const QuadraticElement& v);

 private:
  QuadraticElement(BigRational a, BigRational b, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  friend QuadraticElement quad_mul(const QuadraticElement& p, const QuadraticElement& q);

  BigRational a_;
  BigRational b_;
  BigInt d_;
};

}  // namespace pellredei
