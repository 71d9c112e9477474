#include "pellredei/solver.hpp"

#include <string>

#include "pellredei/errors.hpp"
#include "pellredei/redei.hpp"

namespace pellredei {

std::string_view to_string(SolutionStrategy s) {
  switch (s) {
    case SolutionStrategy::ConvergentScan: return "cf";
    case SolutionStrategy::HyperbolaPower: return "power";
    case SolutionStrategy::RedeiQ2n: return "redei";
  }
  return "?";
}

SolutionStrategy parse_strategy(std::string_view name) {
  if (name == "cf") return SolutionStrategy::ConvergentScan;
  if (name == "power") return SolutionStrategy::HyperbolaPower;
  if (name == "redei") return SolutionStrategy::RedeiQ2n;
  throw DomainError("unknown strategy '" + std::string(name) + "' (expected cf, power or redei)");
}

namespace {

PellSolution checked(const BigInt& d, std::uint64_t n, BigInt x, BigInt y, std::string_view who) {
  if (x * x - d * y * y != BigInt(1) || x.sign() <= 0 || y.sign() <= 0) {
    throw ConsistencyError(std::string(who) + " produced (" + x.to_string() + ", " + y.to_string() +
                           "), not a positive solution for d = " + d.to_string());
  }
  return {d, n, std::move(x), std::move(y)};
}

BigInt as_integer(const BigRational& v, std::string_view who) {
  if (!v.is_integer()) {
    throw ConsistencyError(std::string(who) + " produced non-integer " + v.to_string());
  }
  return v.num();
}

}  // namespace

PellSolver::PellSolver(BigInt d, int rhs) : cf_(sqrt_cf(d)) {
  if (rhs != 1) {
    throw UnsupportedError("only x^2 - dy^2 = 1 is supported (requested rhs " + std::to_string(rhs) + ")");
  }
  ConvergentStream stream(cf_);
  Convergent c = stream.advance_to(convergent_index(1));
  minimal_ = checked(cf_.d, 1, std::move(c.p), std::move(c.q), "minimal solution");
}

std::uint64_t PellSolver::convergent_index(std::uint64_t n) const {
  const std::uint64_t len = cf_.length();
  return even_period() ? n * len - 1 : 2 * n * len - 1;
}

PellSolution PellSolver::nth(std::uint64_t n, SolutionStrategy strategy) const {
  if (n == 0) throw DomainError("solution index starts at 1");
  switch (strategy) {
    case SolutionStrategy::ConvergentScan: return by_convergents(n);
    case SolutionStrategy::HyperbolaPower: return by_power(n);
    case SolutionStrategy::RedeiQ2n: return by_redei(n);
  }
  throw DomainError("unknown strategy");
}

PellSolution PellSolver::by_convergents(std::uint64_t n) const {
  ConvergentStream stream(cf_);
  Convergent c = stream.advance_to(convergent_index(n));
  return checked(cf_.d, n, std::move(c.p), std::move(c.q), "convergent scan");
}

PellSolution PellSolver::by_power(std::uint64_t n) const {
  const HyperbolaPoint base(cf_.d, minimal_.x, minimal_.y);
  HyperbolaPoint p = h_pow(base, static_cast<std::int64_t>(n));
  return checked(cf_.d, n, as_integer(p.x(), "hyperbola power"), as_integer(p.y(), "hyperbola power"),
                 "hyperbola power");
}

BigRational PellSolver::redei_q2n(std::uint64_t n) const {
  const BigRational z(minimal_.x + BigInt(1), minimal_.y);
  ProjectiveRational q = redei_q(cf_.d, z, 2 * n);
  if (q.is_infinite()) throw ConsistencyError("Q_2n evaluated to infinity");
  return q.value();
}

PellSolution PellSolver::by_redei(std::uint64_t n) const {
  // x_n and y_n are coprime, so the reduced fraction is exactly x_n/y_n.
  BigRational q = redei_q2n(n);
  return checked(cf_.d, n, q.num(), q.den(), "Redei Q_2n");
}

CorrespondenceReport PellSolver::correspondence(std::uint64_t n) const {
  if (n == 0) throw DomainError("solution index starts at 1");
  CorrespondenceReport r;
  r.d = cf_.d;
  r.n = n;
  r.period_length = cf_.length();
  r.even_period = even_period();
  r.convergent_index = convergent_index(n);
  r.redei_value = redei_q2n(n);
  ConvergentStream stream(cf_);
  Convergent c = stream.advance_to(r.convergent_index);
  r.convergent_value = BigRational(std::move(c.p), std::move(c.q));
  r.equal = r.redei_value == r.convergent_value;
  return r;
}

SolutionStream::SolutionStream(const BigInt& d)
    : fundamental_([&] {
        const PellSolution m = minimal_solution(d);
        return HyperbolaPoint(d, m.x, m.y);
      }()),
      current_(HyperbolaPoint::identity(d)) {}

PellSolution SolutionStream::next() {
  current_ = h_mul(current_, fundamental_);
  ++n_;
  return checked(current_.d(), n_, as_integer(current_.x(), "solution stream"),
                 as_integer(current_.y(), "solution stream"), "solution stream");
}

PellSolution minimal_solution(const BigInt& d) { return PellSolver(d).minimal(); }

PellSolution nth_solution(const BigInt& d, std::uint64_t n, SolutionStrategy strategy) {
  return PellSolver(d).nth(n, strategy);
}

SolutionStream solutions(const BigInt& d) { return SolutionStream(d); }

CorrespondenceReport correspondence_check(const BigInt& d, std::uint64_t n) {
  return PellSolver(d).correspondence(n);
}

}  // namespace pellredei
