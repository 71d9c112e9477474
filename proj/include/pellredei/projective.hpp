#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "pellredei/rational.hpp"

namespace pellredei {

/// The point at infinity of the projective line.
struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

inline constexpr Infinity kInfinity{};

/// An element of Q ∪ {∞}. Deliberately has no arithmetic operators;
/// the only operations defined on it live in the group modules.
class ProjectiveRational {
 public:
  ProjectiveRational(Infinity) : v_(Infinity{}) {}                 // NOLINT(google-explicit-constructor)
  ProjectiveRational(BigRational value) : v_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  ProjectiveRational(int value) : v_(BigRational(value)) {}        // NOLINT(google-explicit-constructor)

  /// n / d, or ∞ when d is zero (n must then be nonzero).
  static ProjectiveRational ratio(const BigRational& n, const BigRational& d);

  [[nodiscard]] bool is_infinite() const { return std::holds_alternative<Infinity>(v_); }
  [[nodiscard]] bool is_finite() const { return !is_infinite(); }
  /// Throws DomainError on ∞.
  [[nodiscard]] const BigRational& value() const;
  /// "INF" or the rational's text form.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ProjectiveRational&, const ProjectiveRational&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ProjectiveRational& v);

 private:
  std::variant<BigRational, Infinity> v_;
};

}  // namespace pellredei
