#pragma once

#include <cstdint>

#include "pellredei/pd_group.hpp"
#include "pellredei/projective.hpp"
#include "pellredei/quadratic.hpp"

namespace pellredei {

/// A rational point of x² − d·y² = 1. The curve equation is checked on every
/// construction, so closure of the group law is enforced rather than assumed.
class HyperbolaPoint {
 public:
  /// Throws DomainError for d <= 0 and CurveError when the point is off the curve.
  HyperbolaPoint(BigInt d, BigRational x, BigRational y);

  /// The identity (1, 0) on x² − d·y² = 1.
  static HyperbolaPoint identity(BigInt d);

  [[nodiscard]] const BigInt& d() const { return d_; }
  [[nodiscard]] const BigRational& x() const { return x_; }
  [[nodiscard]] const BigRational& y() const { return y_; }

  /// x + y√d, a unit-norm element of Q(√d). Needs d nonsquare.
  [[nodiscard]] QuadraticElement to_quadratic() const;

  friend bool operator==(const HyperbolaPoint&, const HyperbolaPoint&) = default;

 private:
  BigInt d_;
  BigRational x_;
  BigRational y_;
};

/// (s, t) ⊙_H (u, v) = (su + d·tv, tu + sv). Throws DomainError on mismatched d.
[[nodiscard]] HyperbolaPoint h_mul(const HyperbolaPoint& p, const HyperbolaPoint& q);

/// (x, −y).
[[nodiscard]] HyperbolaPoint h_inv(const HyperbolaPoint& p);

/// p^n by binary exponentiation on points.
[[nodiscard]] HyperbolaPoint h_pow(const HyperbolaPoint& p, std::int64_t n);

/// p^n as (N_n(x² − 1, x), y·D_n(x² − 1, x)).
[[nodiscard]] HyperbolaPoint h_pow_redei(const HyperbolaPoint& p, std::uint64_t n);

/// ε_d(m) = ((m² + d)/(m² − d), 2m/(m² − d)); ε_d(∞) = (1, 0).
[[nodiscard]] HyperbolaPoint eps(const PdContext& ctx, const ProjectiveRational& m);

/// τ(x, y) = (1 + x)/y, extended by τ(1, 0) = ∞ and τ(−1, 0) = 0.
[[nodiscard]] ProjectiveRational tau(const HyperbolaPoint& p);

}  // namespace pellredei
