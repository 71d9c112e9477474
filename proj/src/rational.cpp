#include "pellredei/rational.hpp"

#include <ostream>

#include "pellredei/errors.hpp"

namespace pellredei {

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational with zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ /= g;
    den_ /= g;
  }
}

BigRational BigRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(BigInt::parse(text));
  BigInt den = BigInt::parse(text.substr(slash + 1));
  if (den.is_zero()) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
  return BigRational(BigInt::parse(text.substr(0, slash)), std::move(den));
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  if (num_.sign() < 0) return BigRational(-den_, -num_, Reduced{});
  return BigRational(den_, num_, Reduced{});
}

std::string BigRational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

BigRational& BigRational::operator+=(const BigRational& o) {
  if (is_integer() && o.is_integer()) {
    num_ += o.num_;
    return *this;
  }
  *this = BigRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  if (is_integer() && o.is_integer()) {
    num_ -= o.num_;
    return *this;
  }
  *this = BigRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  if (is_integer() && o.is_integer()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel first so the products stay small.
  BigInt g1 = gcd(num_, o.den_);
  BigInt g2 = gcd(o.num_, den_);
  BigInt n = (num_ / g1) * (o.num_ / g2);
  BigInt d = (den_ / g2) * (o.den_ / g1);
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) { return *this *= o.reciprocal(); }

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const BigRational& v) { return os << v.to_string(); }

BigRational pow(const BigRational& base, unsigned long exponent) {
  // Powers of a reduced fraction stay reduced.
  if (exponent == 0) return BigRational(1);
  BigInt n = pow(base.num(), exponent);
  BigInt d = pow(base.den(), exponent);
  return BigRational(std::move(n), std::move(d));
}

}  // namespace pellredei
