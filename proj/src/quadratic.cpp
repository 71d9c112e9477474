#include "pellredei/quadratic.hpp"

#include <ostream>

#include "pellredei/errors.hpp"

namespace pellredei {

QuadraticField::QuadraticField(BigInt d) : d_(std::move(d)) {
  if (d_.sign() <= 0) throw DomainError("Q(sqrt d) needs d > 0, got " + d_.to_string());
  if (is_perfect_square(d_)) throw PerfectSquareError(d_.to_string());
}

namespace {

void require_same_field(const QuadraticElement& p, const QuadraticElement& q) {
  if (p.d() != q.d()) {
    throw DomainError("elements of Q(sqrt " + p.d().to_string() + ") and Q(sqrt " +
                      q.d().to_string() + ") do not mix");
  }
}

}  // namespace

QuadraticElement quad_mul(const QuadraticElement& p, const QuadraticElement& q) {
  require_same_field(p, q);
  // (s + t√d)(u + v√d) = (su + d tv) + (tu + sv)√d
  BigRational a = p.a_ * q.a_ + BigRational(p.d_) * p.b_ * q.b_;
  BigRational b = p.b_ * q.a_ + p.a_ * q.b_;
  return {std::move(a), std::move(b), p.d_};
}

BigRational quad_norm(const QuadraticElement& p) {
  return p.a() * p.a() - BigRational(p.d()) * p.b() * p.b();
}

QuadraticElement QuadraticElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt d)");
  // Nonzero norm because d is not a square.
  BigRational n = quad_norm(*this);
  return {a_ / n, -b_ / n, d_};
}

std::string QuadraticElement::to_string() const {
  return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + abs(b_.num()).to_string() +
         (b_.is_integer() ? "" : "/" + b_.den().to_string()) + "*sqrt(" + d_.to_string() + ")";
}

QuadraticElement operator+(const QuadraticElement& p, const QuadraticElement& q) {
  require_same_field(p, q);
  return {p.a_ + q.a_, p.b_ + q.b_, p.d_};
}

QuadraticElement operator-(const QuadraticElement& p, const QuadraticElement& q) {
  require_same_field(p, q);
  return {p.a_ - q.a_, p.b_ - q.b_, p.d_};
}

std::ostream& operator<<(std::ostream& os, const QuadraticElement& v) { return os << v.to_string(); }

}  // namespace pellredei
