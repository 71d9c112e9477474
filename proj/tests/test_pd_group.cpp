#include <doctest.h>

#include "pellredei/errors.hpp"
#include "pellredei/pd_group.hpp"
#include "random.hpp"

using namespace pellredei;

namespace {

BigRational r(long n, long d = 1) { return {BigInt(n), BigInt(d)}; }

ProjectiveRational fold(const PdContext& ctx, const ProjectiveRational& z, int n) {
  ProjectiveRational acc = kInfinity;
  for (int i = 0; i < n; ++i) acc = odot(ctx, acc, z);
  return acc;
}

}  // namespace

TEST_SUITE("pd-group") {
  TEST_CASE("context validates d") {
    CHECK_THROWS_AS(PdContext(BigInt(9)), PerfectSquareError);
    CHECK_THROWS_AS(PdContext(BigInt(0)), DomainError);
  }

  TEST_CASE("odot examples") {
    const PdContext ctx(BigInt(2));
    CHECK(odot(ctx, 3, 4) == ProjectiveRational(2));
    CHECK(odot(ctx, r(5, 7), kInfinity) == ProjectiveRational(r(5, 7)));
    CHECK(odot(ctx, kInfinity, r(5, 7)) == ProjectiveRational(r(5, 7)));
    CHECK(odot(ctx, r(5, 7), r(-5, 7)).is_infinite());
    CHECK(odot(ctx, kInfinity, kInfinity).is_infinite());
    CHECK(odot(ctx, 0, 0).is_infinite());
  }

  TEST_CASE("group axioms") {
    testing::Gen gen(61);
    for (int i = 0; i < 300; ++i) {
      const PdContext ctx(gen.nonsquare(2, 10000));
      const auto x = gen.projective(), y = gen.projective(), z = gen.projective();
      REQUIRE(odot(ctx, odot(ctx, x, y), z) == odot(ctx, x, odot(ctx, y, z)));
      REQUIRE(odot(ctx, x, y) == odot(ctx, y, x));
      REQUIRE(odot(ctx, x, kInfinity) == x);
      const ProjectiveRational inv = x.is_infinite() ? x : ProjectiveRational(-x.value());
      REQUIRE(odot(ctx, x, inv).is_infinite());
    }
  }

  TEST_CASE("odot_pow examples") {
    const PdContext ctx(BigInt(2));
    CHECK(odot_pow(ctx, 2, 2) == ProjectiveRational(r(3, 2)));
    CHECK(odot_pow(ctx, 2, 0).is_infinite());
    CHECK(odot_pow(ctx, r(9, 4), 0).is_infinite());
    CHECK(odot_pow(ctx, 2, 3) == fold(ctx, 2, 3));
    CHECK(odot_pow(ctx, 2, 3) == ProjectiveRational(r(10, 7)));
    CHECK(odot_pow(ctx, kInfinity, 17).is_infinite());
  }

  TEST_CASE("odot_pow equals the left fold") {
    testing::Gen gen(67);
    for (int i = 0; i < 20; ++i) {
      const PdContext ctx(gen.nonsquare(2, 10000));
      const ProjectiveRational z = gen.rational();
      ProjectiveRational acc = kInfinity;
      for (int n = 0; n <= 64; ++n) {
        REQUIRE(odot_pow(ctx, z, n) == acc);
        const ProjectiveRational inv = acc.is_infinite() ? acc : ProjectiveRational(-acc.value());
        REQUIRE(odot_pow(ctx, z, -n) == inv);
        acc = odot(ctx, acc, z);
      }
    }
  }

  TEST_CASE("rho special values") {
    const PdContext ctx(BigInt(2));
    const QuadraticField f = ctx.field();
    const QuadraticElement root = QuadraticElement::sqrt_d(f);
    CHECK(std::holds_alternative<Infinity>(rho(ctx, QuadraticElement(f, 1))));
    CHECK(std::get<QuadraticElement>(rho(ctx, QuadraticElement(f, 0))) == -root);
    CHECK(std::get<QuadraticElement>(rho(ctx, kInfinity)) == root);
    CHECK(std::get<QuadraticElement>(rho(ctx, QuadraticElement(f, 3))) == QuadraticElement(f, 0, 2));
  }

  TEST_CASE("rho_inv special values") {
    const PdContext ctx(BigInt(2));
    const QuadraticField f = ctx.field();
    CHECK(std::get<QuadraticElement>(rho_inv(ctx, kInfinity)) == QuadraticElement(f, 1));
    CHECK(std::holds_alternative<Infinity>(rho_inv(ctx, QuadraticElement::sqrt_d(f))));
    CHECK(std::get<QuadraticElement>(rho_inv(ctx, QuadraticElement(f, 0, 2))) == QuadraticElement(f, 3));
    CHECK(std::get<QuadraticElement>(rho_inv(ctx, -QuadraticElement::sqrt_d(f))) == QuadraticElement(f, 0));
  }

  TEST_CASE("rho rejects elements of another field") {
    const PdContext ctx(BigInt(2));
    CHECK_THROWS_AS((void)rho(ctx, QuadraticElement(QuadraticField(BigInt(3)), 5)), DomainError);
  }

  TEST_CASE("rho round trips") {
    testing::Gen gen(71);
    for (int i = 0; i < 200; ++i) {
      const PdContext ctx(gen.nonsquare(2, 1000));
      const QuadraticField f = ctx.field();
      std::vector<ProjectiveQuadratic> xs = {
          QuadraticElement(f, 0), QuadraticElement(f, 1), kInfinity,
          QuadraticElement::sqrt_d(f), -QuadraticElement::sqrt_d(f),
          QuadraticElement(f, gen.rational(), gen.rational())};
      for (const auto& x : xs) {
        REQUIRE(rho_inv(ctx, rho(ctx, x)) == x);
        REQUIRE(rho(ctx, rho_inv(ctx, x)) == x);
      }
    }
  }

  TEST_CASE("rho is a homomorphism into odot") {
    testing::Gen gen(73);
    for (int i = 0; i < 200; ++i) {
      const PdContext ctx(gen.nonsquare(2, 1000));
      const QuadraticField f = ctx.field();
      QuadraticElement p(f, gen.rational(), gen.rational());
      QuadraticElement q(f, gen.rational(), gen.rational());
      if (p.is_zero() || q.is_zero()) continue;
      REQUIRE(rho(ctx, p * q) == odot_ext(ctx, rho(ctx, p), rho(ctx, q)));
    }
    // p·q = 1 lands on the identity.
    const PdContext ctx(BigInt(5));
    const QuadraticElement p(ctx.field(), 2, 1);
    CHECK(std::holds_alternative<Infinity>(odot_ext(ctx, rho(ctx, p), rho(ctx, p.inverse()))));
  }

  TEST_CASE("odot_ext agrees with odot on rationals") {
    const PdContext ctx(BigInt(7));
    const QuadraticField f = ctx.field();
    CHECK(std::get<QuadraticElement>(odot_ext(ctx, QuadraticElement(f, 3), QuadraticElement(f, 4))) ==
          QuadraticElement(f, odot(ctx, 3, 4).value()));
    CHECK_THROWS_AS((void)odot_ext(ctx, QuadraticElement::sqrt_d(f), -QuadraticElement::sqrt_d(f)),
                    DomainError);
  }

  TEST_CASE("isomorphism between P_e and P_d") {
    const PdContext e(BigInt(2)), d(BigInt(18));
    const PdIsomorphism phi(e, d);
    CHECK(phi.scale() == r(3));
    testing::Gen gen(79);
    for (int i = 0; i < 100; ++i) {
      const auto x = gen.projective(), y = gen.projective();
      REQUIRE(phi(odot(e, x, y)) == odot(d, phi(x), phi(y)));
    }
    CHECK(PdIsomorphism(PdContext(BigInt(8)), PdContext(BigInt(2))).scale() == r(1, 2));
    CHECK_THROWS_AS(PdIsomorphism(PdContext(BigInt(2)), PdContext(BigInt(3))), DomainError);
  }
}
