#include "pellredei/pd_group.hpp"

#include "pellredei/errors.hpp"
#include "pellredei/redei.hpp"

namespace pellredei {

PdContext::PdContext(BigInt d) : d_(std::move(d)) {
  if (d_.sign() <= 0) throw DomainError("P_d needs d > 0, got " + d_.to_string());
  if (is_perfect_square(d_)) throw PerfectSquareError(d_.to_string());
}

ProjectiveRational odot(const PdContext& ctx, const ProjectiveRational& x,
                        const ProjectiveRational& y) {
  if (x.is_infinite()) return y;
  if (y.is_infinite()) return x;
  const BigRational& a = x.value();
  const BigRational& b = y.value();
  BigRational den = a + b;
  if (den.is_zero()) return kInfinity;
  return (BigRational(ctx.d()) + a * b) / den;
}

ProjectiveRational odot_pow(const PdContext& ctx, const ProjectiveRational& z, std::int64_t n) {
  if (z.is_infinite()) return kInfinity;
  return redei_q_signed(ctx.d(), z.value(), n);
}

namespace {

bool is_one(const QuadraticElement& x) { return x.a() == BigRational(1) && x.b().is_zero(); }

bool is_sqrt_d(const QuadraticElement& x) { return x.a().is_zero() && x.b() == BigRational(1); }

}  // namespace

ProjectiveQuadratic rho(const PdContext& ctx, const ProjectiveQuadratic& x) {
  const QuadraticField field = ctx.field();
  const auto* v = std::get_if<QuadraticElement>(&x);
  if (v == nullptr) return QuadraticElement::sqrt_d(field);
  if (v->d() != ctx.d()) throw DomainError("element is not in Q(sqrt " + ctx.d().to_string() + ")");
  if (is_one(*v)) return kInfinity;
  const QuadraticElement one(field, 1);
  return (*v + one) / (*v - one) * QuadraticElement::sqrt_d(field);
}

ProjectiveQuadratic rho_inv(const PdContext& ctx, const ProjectiveQuadratic& x) {
  const QuadraticField field = ctx.field();
  const auto* v = std::get_if<QuadraticElement>(&x);
  if (v == nullptr) return QuadraticElement(field, 1);
  if (v->d() != ctx.d()) throw DomainError("element is not in Q(sqrt " + ctx.d().to_string() + ")");
  if (is_sqrt_d(*v)) return kInfinity;
  const QuadraticElement root = QuadraticElement::sqrt_d(field);
  return (*v + root) / (*v - root);
}

ProjectiveQuadratic odot_ext(const PdContext& ctx, const ProjectiveQuadratic& x,
                             const ProjectiveQuadratic& y) {
  if (std::holds_alternative<Infinity>(x)) return y;
  if (std::holds_alternative<Infinity>(y)) return x;
  const auto& a = std::get<QuadraticElement>(x);
  const auto& b = std::get<QuadraticElement>(y);
  const QuadraticElement num = QuadraticElement(ctx.field(), BigRational(ctx.d())) + a * b;
  const QuadraticElement den = a + b;
  if (den.is_zero()) {
    if (num.is_zero()) throw DomainError("sqrt(d) and -sqrt(d) have no product");
    return kInfinity;
  }
  return num / den;
}

PdIsomorphism::PdIsomorphism(const PdContext& from, const PdContext& to) {
  const BigRational ratio(to.d(), from.d());
  const BigInt& n = ratio.num();
  const BigInt& m = ratio.den();
  if (!is_perfect_square(n) || !is_perfect_square(m)) {
    throw DomainError("sqrt(" + ratio.to_string() + ") is irrational; no isomorphism over Q");
  }
  scale_ = BigRational(isqrt(n), isqrt(m));
}

ProjectiveRational PdIsomorphism::operator()(const ProjectiveRational& x) const {
  if (x.is_infinite()) return x;
  return x.value() * scale_;
}

}  // namespace pellredei
