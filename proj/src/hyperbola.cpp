#include "pellredei/hyperbola.hpp"

#include "pellredei/errors.hpp"
#include "pellredei/redei.hpp"

namespace pellredei {

HyperbolaPoint::HyperbolaPoint(BigInt d, BigRational x, BigRational y)
    : d_(std::move(d)), x_(std::move(x)), y_(std::move(y)) {
  if (d_.sign() <= 0) throw DomainError("hyperbola needs d > 0, got " + d_.to_string());
  if (x_ * x_ - BigRational(d_) * y_ * y_ != BigRational(1)) {
    throw CurveError("(" + x_.to_string() + ", " + y_.to_string() + ") is not on x^2 - " +
                     d_.to_string() + "y^2 = 1");
  }
}

HyperbolaPoint HyperbolaPoint::identity(BigInt d) { return {std::move(d), 1, 0}; }

QuadraticElement HyperbolaPoint::to_quadratic() const {
  return QuadraticElement(QuadraticField(d_), x_, y_);
}

HyperbolaPoint h_mul(const HyperbolaPoint& p, const HyperbolaPoint& q) {
  if (p.d() != q.d()) {
    throw DomainError("points on x^2 - " + p.d().to_string() + "y^2 = 1 and x^2 - " +
                      q.d().to_string() + "y^2 = 1 do not multiply");
  }
  BigRational x = p.x() * q.x() + BigRational(p.d()) * p.y() * q.y();
  BigRational y = p.y() * q.x() + p.x() * q.y();
  return {p.d(), std::move(x), std::move(y)};
}

HyperbolaPoint h_inv(const HyperbolaPoint& p) { return {p.d(), p.x(), -p.y()}; }

HyperbolaPoint h_pow(const HyperbolaPoint& p, std::int64_t n) {
  HyperbolaPoint base = n < 0 ? h_inv(p) : p;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  HyperbolaPoint acc = HyperbolaPoint::identity(p.d());
  for (; e != 0; e >>= 1) {
    if (e & 1U) acc = h_mul(acc, base);
    if (e > 1) base = h_mul(base, base);
  }
  return acc;
}

HyperbolaPoint h_pow_redei(const HyperbolaPoint& p, std::uint64_t n) {
  // F_n and G_n share the recurrence of N_n and D_n with d replaced by x² − 1.
  const BigRational param = p.x() * p.x() - BigRational(1);
  RedeiPair pair = redei_pair_fast(param, p.x(), n);
  return {p.d(), std::move(pair.N), p.y() * pair.D};
}

HyperbolaPoint eps(const PdContext& ctx, const ProjectiveRational& m) {
  if (m.is_infinite()) return HyperbolaPoint::identity(ctx.d());
  const BigRational& v = m.value();
  const BigRational sq = v * v;
  const BigRational dd(ctx.d());
  // m² ≠ d over Q since d is not a square.
  const BigRational den = sq - dd;
  return {ctx.d(), (sq + dd) / den, BigRational(2) * v / den};
}

ProjectiveRational tau(const HyperbolaPoint& p) {
  if (p.y().is_zero()) {
    // On the curve, y = 0 forces x = ±1.
    if (p.x() == BigRational(1)) return kInfinity;
    return BigRational(0);
  }
  return (BigRational(1) + p.x()) / p.y();
}

}  // namespace pellredei
