#include "pellredei/bigint.hpp"

#include <limits>
#include <ostream>

#include "pellredei/errors.hpp"

namespace pellredei {

static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");

BigInt::BigInt(long long v) : v_(static_cast<long>(v)) {}
BigInt::BigInt(unsigned long long v) : v_(static_cast<unsigned long>(v)) {}

BigInt BigInt::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw DomainError("not an integer: '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return BigInt(mpz_class(s, 10));
}

std::size_t BigInt::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

std::size_t BigInt::decimal_digits() const {
  // mpz_sizeinbase may overshoot by one for base 10.
  std::string s = abs(*this).to_string();
  return s.size();
}

bool BigInt::fits_int64() const { return mpz_fits_slong_p(v_.get_mpz_t()) != 0; }

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw DomainError(to_string() + " does not fit in 64 bits");
  return mpz_get_si(v_.get_mpz_t());
}

BigInt& BigInt::operator/=(const BigInt& o) {
  if (o.is_zero()) throw DomainError("integer division by zero");
  mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
  if (o.is_zero()) throw DomainError("integer division by zero");
  mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

BigInt& BigInt::operator<<=(std::size_t bits) {
  mpz_mul_2exp(v_.get_mpz_t(), v_.get_mpz_t(), bits);
  return *this;
}

BigInt& BigInt::operator>>=(std::size_t bits) {
  mpz_fdiv_q_2exp(v_.get_mpz_t(), v_.get_mpz_t(), bits);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt abs(const BigInt& v) { return v.sign() < 0 ? -v : v; }

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(g));
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DomainError("integer division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) throw DomainError("isqrt of negative number " + n.to_string());
  if (n.is_zero()) return BigInt(0);
  // 2^ceil(bits/2) >= sqrt(n); from above, Newton decreases monotonically
  // until it reaches floor(sqrt(n)).
  BigInt x = BigInt(1) << ((n.bit_length() + 1) / 2);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

bool is_perfect_square(const BigInt& n) {
  if (n.sign() < 0) return false;
  BigInt r = isqrt(n);
  return r * r == n;
}

}  // namespace pellredei
