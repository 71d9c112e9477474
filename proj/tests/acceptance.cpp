// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pellredei/bench.hpp"
#include "pellredei/errors.hpp"
#include "pellredei/hyperbola.hpp"
#include "pellredei/pd_group.hpp"
#include "pellredei/redei.hpp"
#include "pellredei/solver.hpp"
#include "random.hpp"

using namespace pellredei;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<long> nonsquares(long lo, long hi) {
  std::vector<long> out;
  for (long d = lo; d <= hi; ++d) {
    if (!is_perfect_square(BigInt(d))) out.push_back(d);
  }
  return out;
}

ProjectiveRational negate(const ProjectiveRational& x) {
  return x.is_infinite() ? x : ProjectiveRational(-x.value());
}

// 1. Fundamental solutions for 2 <= d <= 500 against the first Pell convergent.
Outcome fundamental_solutions() {
  const auto ds = nonsquares(2, 500);
  std::vector<PellSolution> got;
  const auto start = Clock::now();
  for (long d : ds) got.push_back(minimal_solution(BigInt(d)));
  const double elapsed = seconds_since(start);

  int mismatches = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const BigInt d(ds[i]);
    const auto hit = oracle::first_pell_convergent(d);
    const auto& s = got[i];
    if (s.x * s.x - d * s.y * s.y != BigInt(1) || s.x != hit.x || s.y != hit.y) ++mismatches;
  }
  const bool spots = got[0] == PellSolution{BigInt(2), 1, BigInt(3), BigInt(2)} &&
                     got[1] == PellSolution{BigInt(3), 1, BigInt(2), BigInt(1)} &&
                     minimal_solution(BigInt(61)) ==
                         PellSolution{BigInt(61), 1, BigInt(1766319049L), BigInt(226153980L)};
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu values of d, %d mismatches, spot values %s, %.3f s (limit 5 s)",
                ds.size(), mismatches, spots ? "ok" : "WRONG", elapsed);
  return {mismatches == 0 && spots && elapsed < 5.0, buf};
}

// 2. Convergent index used is L − 1 (L even) or 2L − 1 (L odd).
Outcome parity_rule() {
  int mismatches = 0;
  const auto ds = nonsquares(2, 500);
  for (long d : ds) {
    const PellSolver solver{BigInt(d)};
    const std::size_t len = solver.expansion().length();
    const std::uint64_t rule = len % 2 == 0 ? len - 1 : 2 * len - 1;
    const auto hit = oracle::first_pell_convergent(BigInt(d));
    if (solver.convergent_index(1) != rule || hit.index != rule) ++mismatches;
  }
  return {mismatches == 0, std::to_string(ds.size()) + " values of d, " + std::to_string(mismatches) +
                               " index mismatches"};
}

// 3. Q_2n(d, (x1 + 1)/y1) equals the convergent p/q at nL − 1 or 2nL − 1.
Outcome central_correspondence() {
  int checked = 0, failures = 0;
  const auto start = Clock::now();
  for (long d : nonsquares(2, 100)) {
    const PellSolver solver{BigInt(d)};
    for (std::uint64_t n = 1; n <= 10; ++n) {
      ++checked;
      if (!solver.correspondence(n).equal) ++failures;
    }
  }
  const double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d checks, %d failures, %.3f s (limit 10 s)", checked, failures, elapsed);
  return {failures == 0 && elapsed < 10.0, buf};
}

// 4. Additive, multiplicative and determinant properties of Redei functions.
Outcome redei_algebra() {
  testing::Gen gen(20240401);
  int additive = 0, multiplicative = 0, determinant = 0;
  int bad = 0;
  while (additive < 1000) {
    const BigInt d = gen.nonsquare(2, 10000);
    const PdContext ctx(d);
    const BigRational z = gen.coin(0.1) ? BigRational(0) : gen.rational();
    const auto n = static_cast<std::uint64_t>(gen.integer(0, 50));
    const auto m = static_cast<std::uint64_t>(gen.integer(0, 50));
    if (redei_q(d, z, n + m) != odot(ctx, redei_q(d, z, n), redei_q(d, z, m))) ++bad;
    ++additive;
  }
  while (multiplicative < 500) {
    const BigInt d = gen.nonsquare(2, 10000);
    const BigRational z = gen.nonzero_rational();
    const auto n = static_cast<std::uint64_t>(gen.integer(1, 20));
    const auto m = static_cast<std::uint64_t>(gen.integer(1, 20));
    const auto inner = redei_q(d, z, m);
    if (inner.is_infinite()) continue;
    if (redei_q(d, z, n * m) != redei_q(d, inner.value(), n)) ++bad;
    ++multiplicative;
  }
  while (determinant < 1000) {
    const BigInt d = gen.nonsquare(2, 10000);
    const BigRational z = gen.rational();
    const auto n = static_cast<std::uint64_t>(gen.integer(0, 60));
    const auto p = redei_pair_fast(d, z, n);
    if (p.N * p.N - BigRational(d) * p.D * p.D != pow(z * z - BigRational(d), n)) ++bad;
    ++determinant;
  }
  return {bad == 0, "1000 additive, 500 multiplicative, 1000 determinant; " + std::to_string(bad) +
                        " failures"};
}

// 5. Group axioms on P_d and H_d, rho multiplicativity, eps/tau, tau homomorphism.
Outcome groups_and_isomorphisms() {
  testing::Gen gen(20240402);
  int bad_pd = 0, bad_h = 0, bad_rho = 0, bad_round = 0, bad_hom = 0;
  for (int i = 0; i < 500; ++i) {
    const PdContext ctx(gen.nonsquare(2, 1000));
    const auto x = gen.projective(), y = gen.projective(), z = gen.projective();
    if (odot(ctx, odot(ctx, x, y), z) != odot(ctx, x, odot(ctx, y, z)) || odot(ctx, x, y) != odot(ctx, y, x) ||
        odot(ctx, x, kInfinity) != x || !odot(ctx, x, negate(x)).is_infinite()) {
      ++bad_pd;
    }
  }
  for (int i = 0; i < 500; ++i) {
    const PdContext ctx(gen.nonsquare(2, 1000));
    const auto p = gen.point(ctx), q = gen.point(ctx), s = gen.point(ctx);
    const auto e = HyperbolaPoint::identity(ctx.d());
    if (h_mul(h_mul(p, q), s) != h_mul(p, h_mul(q, s)) || h_mul(p, q) != h_mul(q, p) || h_mul(p, e) != p ||
        h_mul(p, h_inv(p)) != e) {
      ++bad_h;
    }
  }
  for (int i = 0; i < 500;) {
    const PdContext ctx(gen.nonsquare(2, 1000));
    const QuadraticField f = ctx.field();
    const QuadraticElement p(f, gen.rational(), gen.rational());
    const QuadraticElement q(f, gen.rational(), gen.rational());
    if (p.is_zero() || q.is_zero()) continue;
    if (rho(ctx, p * q) != odot_ext(ctx, rho(ctx, p), rho(ctx, q))) ++bad_rho;
    if (rho_inv(ctx, rho(ctx, p)) != ProjectiveQuadratic(p)) ++bad_rho;
    ++i;
  }
  for (int i = 0; i < 500; ++i) {
    const PdContext ctx(gen.nonsquare(2, 1000));
    const ProjectiveRational m = gen.projective(0.1);
    const auto p = gen.point(ctx);
    if (tau(eps(ctx, m)) != m || eps(ctx, tau(p)) != p) ++bad_round;
  }
  for (int i = 0; i < 500; ++i) {
    const PdContext ctx(gen.nonsquare(2, 1000));
    const auto p = gen.point(ctx), q = gen.point(ctx);
    if (tau(h_mul(p, q)) != odot(ctx, tau(p), tau(q))) ++bad_hom;
  }
  const int bad = bad_pd + bad_h + bad_rho + bad_round + bad_hom;
  return {bad == 0, "500 each; failures: odot " + std::to_string(bad_pd) + ", odot_H " + std::to_string(bad_h) +
                        ", rho " + std::to_string(bad_rho) + ", eps/tau " + std::to_string(bad_round) +
                        ", tau hom " + std::to_string(bad_hom)};
}

// 6. Powers: h_pow = h_pow_redei = fold of h_mul, odot_pow = fold of odot.
Outcome power_oracles() {
  testing::Gen gen(20240403);
  int bad = 0;
  for (int b = 0; b < 100; ++b) {
    const PdContext ctx(gen.nonsquare(2, 1000));
    const auto p = gen.point(ctx);
    const ProjectiveRational z = gen.rational();
    auto acc = HyperbolaPoint::identity(ctx.d());
    ProjectiveRational acc_pd = kInfinity;
    for (int n = 0; n <= 64; ++n) {
      if (h_pow(p, n) != acc || h_pow_redei(p, static_cast<std::uint64_t>(n)) != acc) ++bad;
      if (odot_pow(ctx, z, n) != acc_pd) ++bad;
      acc = h_mul(acc, p);
      acc_pd = odot(ctx, acc_pd, z);
    }
  }
  return {bad == 0, "100 bases x 65 exponents, " + std::to_string(bad) + " failures"};
}

// 7. 2 N_n(d, z) = g_n(z² − d, 2z) and recurrence = explicit sum.
Outcome dickson_identity() {
  testing::Gen gen(20240404);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    const BigInt d = gen.nonsquare(2, 10000);
    const BigRational z = gen.rational();
    const auto n = static_cast<std::uint64_t>(gen.integer(0, 60));
    if (BigRational(2) * redei_pair_linear(d, z, n).N != dickson_eval(z * z - BigRational(d), BigRational(2) * z, n)) {
      ++bad;
    }
    const BigRational a = gen.rational(9, 5), x = gen.rational(9, 5);
    if (dickson_eval(a, x, n) != oracle::dickson_sum(a, x, n)) ++bad;
  }
  return {bad == 0, "500 cases, " + std::to_string(bad) + " failures"};
}

// 8. Binary strategies at least 10x faster than the linear fold; linear digit growth.
Outcome performance() {
  const BenchReport r = run_bench(BigInt(2), 10000, 3);
  const double fold = static_cast<double>(r.timings[0].median_ns);
  const double power = static_cast<double>(r.timings[1].median_ns);
  const double redei = static_cast<double>(r.timings[2].median_ns);
  const bool fast = fold >= 10.0 * power && fold >= 10.0 * redei;

  const PellSolver solver{BigInt(2)};
  const auto digits = [&](std::uint64_t n) {
    return static_cast<long>(solver.nth(n, SolutionStrategy::RedeiQ2n).x.decimal_digits());
  };
  const long d2 = digits(100), d3 = digits(1000);
  const long d4 = static_cast<long>(r.timings[0].x.decimal_digits());
  // Line through (100, d2) and (1000, d3), evaluated at 10^4, as an exact rational.
  const BigRational predicted = BigRational(d3) + BigRational(BigInt(d3 - d2) * BigInt(9000), BigInt(900));
  const BigRational diff = BigRational(d4) - predicted;
  const bool linear = diff <= BigRational(1) && diff >= BigRational(-1);

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "n=10^4: fold %.2f ms, power %.2f ms (%.0fx), redei %.2f ms (%.0fx), identical %s; digits %ld "
                "vs extrapolated %s",
                fold / 1e6, power / 1e6, fold / power, redei / 1e6, fold / redei, r.agree ? "yes" : "NO", d4,
                predicted.to_string().c_str());
  return {fast && r.agree && linear, buf};
}

// 9. CF period ends in 2a0, palindromic interior, convergent determinant identity.
Outcome cf_self_checks() {
  int bad = 0;
  const auto ds = nonsquares(2, 1000);
  for (long d : ds) {
    const CFExpansion cf = sqrt_cf(BigInt(d));
    const std::size_t len = cf.length();
    if (cf.period.back() != cf.a0 + cf.a0) ++bad;
    for (std::size_t k = 1; k < len; ++k) {
      if (cf.period[k - 1] != cf.period[len - k - 1]) ++bad;
    }
    ConvergentStream s(cf);
    BigInt p_prev(1), q_prev(0);
    for (std::uint64_t k = 0; k <= 2 * len; ++k) {
      const Convergent c = s.next();
      const BigInt expected(k % 2 == 0 ? -1 : 1);  // (−1)^(k−1)
      if (c.p * q_prev - p_prev * c.q != expected) ++bad;
      p_prev = c.p;
      q_prev = c.q;
    }
  }
  return {bad == 0, std::to_string(ds.size()) + " values of d, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 fundamental solutions", fundamental_solutions},
      {"2 parity rule", parity_rule},
      {"3 central correspondence", central_correspondence},
      {"4 redei algebra", redei_algebra},
      {"5 groups and isomorphisms", groups_and_isomorphisms},
      {"6 power oracles", power_oracles},
      {"7 dickson identity", dickson_identity},
      {"8 performance", performance},
      {"9 cf self-checks", cf_self_checks},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
