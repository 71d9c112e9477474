#include "pellredei/redei.hpp"

#include <bit>
#include <limits>

#include "pellredei/errors.hpp"

namespace pellredei {

namespace {

void require_positive(const BigInt& d) {
  if (d.sign() <= 0) throw DomainError("Redei functions need d > 0, got " + d.to_string());
}

}  // namespace

RedeiPair redei_pair_linear(const BigInt& d, const BigRational& z, std::uint64_t n) {
  require_positive(d);
  if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw DomainError("index too large");
  }
  const BigRational dd(d);
  const BigRational h = BigRational(2) * z;
  const BigRational k = z * z - dd;

  RedeiPair out{dd, z, static_cast<std::int64_t>(n), BigRational(1), BigRational(0)};
  if (n == 0) return out;

  BigRational n_prev(1), n_cur = z;
  BigRational d_prev(0), d_cur(1);
  for (std::uint64_t i = 2; i <= n; ++i) {
    BigRational n_next = h * n_cur - k * n_prev;
    BigRational d_next = h * d_cur - k * d_prev;
    n_prev = std::move(n_cur);
    n_cur = std::move(n_next);
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  out.N = std::move(n_cur);
  out.D = std::move(d_cur);
  return out;
}

RedeiPair redei_pair_fast(const BigInt& d, const BigRational& z, std::uint64_t n) {
  require_positive(d);
  return redei_pair_fast(BigRational(d), z, n);
}

RedeiPair redei_pair_fast(const BigRational& d, const BigRational& z, std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw DomainError("index too large");
  }
  BigRational big_n(1), big_d(0);
  const BigRational two(2);
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    // k -> 2k
    BigRational n2 = big_n * big_n + d * big_d * big_d;
    big_d = two * big_n * big_d;
    big_n = std::move(n2);
    if ((n >> bit) & 1U) {
      // k -> k + 1 against (z, 1)
      BigRational n1 = big_n * z + d * big_d;
      big_d = big_d * z + big_n;
      big_n = std::move(n1);
    }
  }
  return {d, z, static_cast<std::int64_t>(n), std::move(big_n), std::move(big_d)};
}

RedeiPair redei_pair_add(const RedeiPair& p, const RedeiPair& q) {
  if (p.d != q.d || p.z != q.z) throw DomainError("Redei pairs with different (d, z) do not add");
  BigRational big_n = p.N * q.N + p.d * p.D * q.D;
  BigRational big_d = p.D * q.N + p.N * q.D;
  return {p.d, p.z, p.n + q.n, std::move(big_n), std::move(big_d)};
}

RedeiPair redei_pair_signed(const BigInt& d, const BigRational& z, std::int64_t n) {
  if (n >= 0) return redei_pair_fast(d, z, static_cast<std::uint64_t>(n));
  const std::uint64_t m = static_cast<std::uint64_t>(-(n + 1)) + 1;
  const BigRational det = z * z - BigRational(d);
  if (det.is_zero()) throw DomainError("Redei matrix is singular for z^2 = d");
  RedeiPair p = redei_pair_fast(d, z, m);
  const BigRational scale = pow(det, m).reciprocal();
  p.n = n;
  p.N = p.N * scale;
  p.D = -(p.D * scale);
  return p;
}

ProjectiveRational redei_q(const RedeiPair& pair) {
  // N and D never vanish together when d > 0.
  return ProjectiveRational::ratio(pair.N, pair.D);
}

ProjectiveRational redei_q(const BigInt& d, const BigRational& z, std::uint64_t n) {
  return redei_q(redei_pair_fast(d, z, n));
}

ProjectiveRational redei_q_signed(const BigInt& d, const BigRational& z, std::int64_t n) {
  if (n >= 0) return redei_q(d, z, static_cast<std::uint64_t>(n));
  const std::uint64_t m = static_cast<std::uint64_t>(-(n + 1)) + 1;
  ProjectiveRational q = redei_q(d, z, m);
  if (q.is_infinite()) return q;
  return -q.value();
}

BigRational dickson_eval(const BigRational& a, const BigRational& x, std::uint64_t n) {
  if (n == 0) return BigRational(2);
  BigRational prev(2), cur = x;
  for (std::uint64_t i = 2; i <= n; ++i) {
    BigRational next = x * cur - a * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace pellredei
