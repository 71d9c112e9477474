#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pellredei/bigint.hpp"

namespace pellredei {

/// √d = [a0; period...] where period = (a_1, ..., a_L) and a_L = 2·a0.
struct CFExpansion {
  BigInt d;
  BigInt a0;
  std::vector<BigInt> period;

  [[nodiscard]] std::size_t length() const { return period.size(); }
  /// a_k for any k >= 0, cycling the period.
  [[nodiscard]] const BigInt& partial_quotient(std::uint64_t k) const;
};

/// One step of the integer surd recurrence for √d: the complete quotient
/// (m + √d)/s with partial quotient a.
struct SurdState {
  BigInt m;
  BigInt s;
  BigInt a;

  friend bool operator==(const SurdState&, const SurdState&) = default;
};

/// m' = a·s − m, s' = (d − m'²)/s, a' = ⌊(a0 + m')/s'⌋.
[[nodiscard]] SurdState next_surd_state(const BigInt& d, const BigInt& a0, const SurdState& st);

/// First period of the continued fraction of √d. Stops when the surd state
/// returns to its value after the first step, then checks that the last
/// partial quotient is 2·a0 (ConsistencyError otherwise).
/// Throws DomainError for d <= 0 and PerfectSquareError for square d.
[[nodiscard]] CFExpansion sqrt_cf(const BigInt& d);

/// p_k/q_k = [a0, ..., a_k].
struct Convergent {
  std::uint64_t k = 0;
  BigInt p;
  BigInt q;

  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Unbounded lazy stream of convergents. Single consumer; copies are
/// independent cursors.
class ConvergentStream {
 public:
  explicit ConvergentStream(CFExpansion cf);

  /// Convergent k, then k + 1 on the next call, starting at k = 0.
  Convergent next();
  /// Advances to index k (which must not be behind the cursor) and returns it.
  Convergent advance_to(std::uint64_t k);
  /// Index the next call to next() will produce.
  [[nodiscard]] std::uint64_t position() const { return k_; }
  [[nodiscard]] const CFExpansion& expansion() const { return cf_; }

 private:
  CFExpansion cf_;
  std::uint64_t k_ = 0;
  // (p_{k-1}, q_{k-1}) and (p_{k-2}, q_{k-2}) relative to the next index k.
  BigInt p1_{1}, q1_{0}, p2_{0}, q2_{1};
};

[[nodiscard]] ConvergentStream convergents(const CFExpansion& cf);

}  // namespace pellredei
