#pragma once

#include <cstdint>

#include "pellredei/projective.hpp"
#include "pellredei/rational.hpp"

namespace pellredei {

/// Coefficients of (z + √d)^n = N + D·√d, with the inputs that produced them.
///
/// For every pair, N² − d·D² = (z² − d)^n. This is the determinant of
/// [[z, d], [1, z]]^n = [[N, d·D], [D, N]]. Note that the well-known
/// doubling argument is sometimes quoted with the factor d missing on D²;
/// the identity with d is the one that holds.
struct RedeiPair {
  BigRational d;
  BigRational z;
  std::int64_t n = 0;
  BigRational N = BigRational(1);
  BigRational D;

  friend bool operator==(const RedeiPair&, const RedeiPair&) = default;
};

/// N and D by the order-2 recurrence a_k = 2z·a_{k-1} − (z² − d)·a_{k-2}
/// with seeds (1, z) and (0, 1). Linear in n. Requires d > 0.
[[nodiscard]] RedeiPair redei_pair_linear(const BigInt& d, const BigRational& z, std::uint64_t n);

/// Same value as redei_pair_linear, by square-and-multiply over the bits of n
/// (most significant first) using N_{2k} = N_k² + d·D_k², D_{2k} = 2·N_k·D_k
/// and the step k -> k+1 against the fixed base (z, 1). Requires d > 0.
[[nodiscard]] RedeiPair redei_pair_fast(const BigInt& d, const BigRational& z, std::uint64_t n);

/// As redei_pair_fast, but for any rational parameter d (including zero and
/// non-integers). Used for F_n(x) = N_n(x² − 1, x) with rational x.
[[nodiscard]] RedeiPair redei_pair_fast(const BigRational& d, const BigRational& z, std::uint64_t n);

/// Index addition: (N_{n+m}, D_{n+m}) = (N_n N_m + d D_n D_m, D_n N_m + N_n D_m).
/// Both pairs must share d and z.
[[nodiscard]] RedeiPair redei_pair_add(const RedeiPair& p, const RedeiPair& q);

/// Pair for a signed index. Negative n uses the inverse of the Rédei
/// matrix: N_{-n} = N_n / (z² − d)^n and D_{-n} = −D_n / (z² − d)^n.
/// Throws DomainError when n < 0 and z² = d (singular matrix).
[[nodiscard]] RedeiPair redei_pair_signed(const BigInt& d, const BigRational& z, std::int64_t n);

/// Q_n(d, z) = N_n / D_n, or ∞ when D_n = 0 (in particular for n = 0).
[[nodiscard]] ProjectiveRational redei_q(const BigInt& d, const BigRational& z, std::uint64_t n);

/// Q_n for any integer n; Q_{-n} = −Q_n, the inverse of Q_n under ⊙_d.
[[nodiscard]] ProjectiveRational redei_q_signed(const BigInt& d, const BigRational& z, std::int64_t n);

/// Q_n of a finished pair.
[[nodiscard]] ProjectiveRational redei_q(const RedeiPair& pair);

/// Dickson polynomial g_n(a, x) by g_k = x·g_{k-1} − a·g_{k-2}, g_0 = 2, g_1 = x.
[[nodiscard]] BigRational dickson_eval(const BigRational& a, const BigRational& x, std::uint64_t n);

}  // namespace pellredei
