#pragma once

#include <cstdint>
#include <variant>

#include "pellredei/projective.hpp"
#include "pellredei/quadratic.hpp"

namespace pellredei {

/// The group (Q ∪ {∞}, ⊙_d) with x ⊙_d y = (d + xy) / (x + y).
/// ∞ is the identity and −x is the inverse of x.
class PdContext {
 public:
  /// Throws DomainError for d <= 0 and PerfectSquareError for square d.
  explicit PdContext(BigInt d);

  [[nodiscard]] const BigInt& d() const { return d_; }
  [[nodiscard]] QuadraticField field() const { return QuadraticField(d_); }

 private:
  BigInt d_;
};

[[nodiscard]] ProjectiveRational odot(const PdContext& ctx, const ProjectiveRational& x,
                                      const ProjectiveRational& y);

/// z^n under ⊙_d, i.e. Q_n(d, z); negative n gives the inverse power.
[[nodiscard]] ProjectiveRational odot_pow(const PdContext& ctx, const ProjectiveRational& z,
                                          std::int64_t n);

/// An element of Q(√d) or ∞; domain and range of ρ_d.
using ProjectiveQuadratic = std::variant<QuadraticElement, Infinity>;

/// ρ_d(x) = (x + 1)/(x − 1)·√d, with ρ_d(1) = ∞ and ρ_d(∞) = √d.
[[nodiscard]] ProjectiveQuadratic rho(const PdContext& ctx, const ProjectiveQuadratic& x);

/// ρ_d⁻¹(x) = (x + √d)/(x − √d), with ρ_d⁻¹(√d) = ∞ and ρ_d⁻¹(∞) = 1.
[[nodiscard]] ProjectiveQuadratic rho_inv(const PdContext& ctx, const ProjectiveQuadratic& x);

/// (d + xy)/(x + y) evaluated in Q(√d). x + y = 0 gives ∞ unless the
/// numerator vanishes too ({x, y} = {√d, −√d}), which throws DomainError.
[[nodiscard]] ProjectiveQuadratic odot_ext(const PdContext& ctx, const ProjectiveQuadratic& x,
                                           const ProjectiveQuadratic& y);

/// The isomorphism (P_e, ⊙_e) -> (P_d, ⊙_d), x ↦ x·√(d/e). Only available
/// when d/e is the square of a rational; otherwise construction throws
/// DomainError since the image would leave Q.
class PdIsomorphism {
 public:
  PdIsomorphism(const PdContext& from, const PdContext& to);

  [[nodiscard]] const BigRational& scale() const { return scale_; }
  [[nodiscard]] ProjectiveRational operator()(const ProjectiveRational& x) const;

 private:
  BigRational scale_;
};

}  // namespace pellredei
