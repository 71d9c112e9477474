#pragma once

#include <cstdint>
#include <string_view>

#include "pellredei/contfrac.hpp"
#include "pellredei/hyperbola.hpp"
#include "pellredei/rational.hpp"

namespace pellredei {

/// A positive solution (x_n, y_n) of x² − d·y² = 1, the n-th power of the
/// fundamental solution.
struct PellSolution {
  BigInt d;
  std::uint64_t n = 1;
  BigInt x;
  BigInt y;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

enum class SolutionStrategy {
  ConvergentScan,  ///< p/q at convergent index nL − 1 (L even) or 2nL − 1 (L odd)
  HyperbolaPower,  ///< binary power of (x_1, y_1) under ⊙_H
  RedeiQ2n,        ///< Q_{2n}(d, (x_1 + 1)/y_1) = x_n/y_n
};

[[nodiscard]] std::string_view to_string(SolutionStrategy s);
/// Accepts "cf", "power", "redei". Throws DomainError otherwise.
[[nodiscard]] SolutionStrategy parse_strategy(std::string_view name);

/// Both sides of Q_{2n}(d, (x_1 + 1)/y_1) = p_j/q_j computed independently.
struct CorrespondenceReport {
  BigInt d;
  std::uint64_t n = 1;
  std::size_t period_length = 0;
  bool even_period = false;
  std::uint64_t convergent_index = 0;  ///< j = nL − 1 or 2nL − 1
  BigRational redei_value;
  BigRational convergent_value;
  bool equal = false;
};

/// Per-d solver state: the continued fraction, the period parity, and the
/// fundamental solution are computed once at construction.
///
/// Only x² − d·y² = 1 is handled; constructing with rhs != 1 throws
/// UnsupportedError.
class PellSolver {
 public:
  explicit PellSolver(BigInt d, int rhs = 1);

  [[nodiscard]] const BigInt& d() const { return cf_.d; }
  [[nodiscard]] const CFExpansion& expansion() const { return cf_; }
  [[nodiscard]] bool even_period() const { return cf_.length() % 2 == 0; }
  /// Convergent index of the n-th solution: nL − 1 or 2nL − 1.
  [[nodiscard]] std::uint64_t convergent_index(std::uint64_t n) const;

  [[nodiscard]] const PellSolution& minimal() const { return minimal_; }
  /// Throws DomainError for n == 0 and ConsistencyError if a strategy
  /// produces a pair off the curve.
  [[nodiscard]] PellSolution nth(std::uint64_t n, SolutionStrategy strategy) const;
  [[nodiscard]] CorrespondenceReport correspondence(std::uint64_t n) const;

 private:
  [[nodiscard]] PellSolution by_convergents(std::uint64_t n) const;
  [[nodiscard]] PellSolution by_power(std::uint64_t n) const;
  [[nodiscard]] PellSolution by_redei(std::uint64_t n) const;
  [[nodiscard]] BigRational redei_q2n(std::uint64_t n) const;

  CFExpansion cf_;
  PellSolution minimal_;
};

/// Solutions n = 1, 2, ... by repeated composition with (x_1, y_1).
class SolutionStream {
 public:
  explicit SolutionStream(const BigInt& d);

  PellSolution next();

 private:
  HyperbolaPoint fundamental_;
  HyperbolaPoint current_;
  std::uint64_t n_ = 0;
};

[[nodiscard]] PellSolution minimal_solution(const BigInt& d);
[[nodiscard]] PellSolution nth_solution(const BigInt& d, std::uint64_t n, SolutionStrategy strategy);
[[nodiscard]] SolutionStream solutions(const BigInt& d);
[[nodiscard]] CorrespondenceReport correspondence_check(const BigInt& d, std::uint64_t n);

}  // namespace pellredei
