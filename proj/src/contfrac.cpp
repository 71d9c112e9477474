#include "pellredei/contfrac.hpp"

#include "pellredei/errors.hpp"

namespace pellredei {

const BigInt& CFExpansion::partial_quotient(std::uint64_t k) const {
  if (k == 0) return a0;
  return period[(k - 1) % period.size()];
}

SurdState next_surd_state(const BigInt& d, const BigInt& a0, const SurdState& st) {
  BigInt m = st.a * st.s - st.m;
  // s divides d − m² at every step (induction on the recurrence).
  BigInt s = (d - m * m) / st.s;
  BigInt a = (a0 + m) / s;
  return {std::move(m), std::move(s), std::move(a)};
}

CFExpansion sqrt_cf(const BigInt& d) {
  if (d.sign() <= 0) throw DomainError("sqrt_cf needs d > 0, got " + d.to_string());
  const BigInt a0 = isqrt(d);
  if (a0 * a0 == d) throw PerfectSquareError(d.to_string());

  CFExpansion cf{d, a0, {}};
  const SurdState start{BigInt(0), BigInt(1), a0};
  const SurdState first = next_surd_state(d, a0, start);
  SurdState st = first;
  do {
    cf.period.push_back(st.a);
    st = next_surd_state(d, a0, st);
  } while (st != first);

  if (cf.period.back() != a0 + a0) {
    throw ConsistencyError("period of sqrt(" + d.to_string() + ") does not end in 2*a0");
  }
  return cf;
}

ConvergentStream::ConvergentStream(CFExpansion cf) : cf_(std::move(cf)) {}

Convergent ConvergentStream::next() {
  const BigInt& a = cf_.partial_quotient(k_);
  BigInt p = a * p1_ + p2_;
  BigInt q = a * q1_ + q2_;
  p2_ = std::move(p1_);
  q2_ = std::move(q1_);
  p1_ = p;
  q1_ = q;
  return {k_++, std::move(p), std::move(q)};
}

Convergent ConvergentStream::advance_to(std::uint64_t k) {
  if (k < k_) throw DomainError("convergent stream cannot move backwards");
  while (k_ < k) next();
  return next();
}

ConvergentStream convergents(const CFExpansion& cf) { return ConvergentStream(cf); }

}  // namespace pellredei
