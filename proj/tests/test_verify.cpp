#include <doctest.h>

#include <random>

#include "holo/error.hpp"
#include "holo/io.hpp"
#include "holo/verify.hpp"
#include "support.hpp"

using namespace holo;
using holo::test::P;

namespace {

Rational pow10_inv(unsigned long e) { return Rational(1, ipow(Integer(10), e)); }

std::vector<Rational> terms_for(const SeedIdentity& s, long N) {
  return seq_terms(resolve_sequence(test::catalog(), s.sequence, s.alternating, s.geom), N);
}

}  // namespace

TEST_CASE("pi by two formulas and the embedded digits") {
  const auto& digits = embedded_pi_digits();
  CHECK(digits.size() == 1001);
  CHECK(digits.substr(0, 10) == "3141592653");
  CHECK(pi_machin(60).get_str() == digits.substr(0, 61));
  CHECK(pi_gauss(60).get_str() == digits.substr(0, 61));
  const Integer a = pi_machin(900);
  const Integer b = pi_gauss(900);
  CHECK(abs(Integer(a - b)) <= 1);
  CHECK(Integer(a / 100).get_str() == digits.substr(0, 899));
}

TEST_CASE("precision context") {
  const PrecisionContext ctx(50, {3, 95});
  CHECK(ctx.digits() == 50);
  CHECK(ctx.working_digits() == 70);
  CHECK(ctx.pi_string() == "3.14159265358979323846264338327950288419716939937510");
  const Integer s3 = ctx.sqrt_scaled(3);
  const Integer scale = ipow(Integer(10), 140);
  CHECK(s3 * s3 <= 3 * scale);
  CHECK((s3 + 1) * (s3 + 1) > 3 * scale);
  CHECK(ctx.sqrt_scaled(95) == isqrt_newton(95 * scale));
  CHECK(ctx.sqrt_scaled(7) == isqrt_newton(7 * scale));  // not cached
  CHECK_THROWS_AS(PrecisionContext(19), DomainError);
  CHECK_NOTHROW(PrecisionContext(980));
}

TEST_CASE("integer square roots") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    Integer n = Integer(static_cast<unsigned long>(rng())) * Integer(static_cast<unsigned long>(rng()));
    n *= Integer(static_cast<unsigned long>(rng() % 1000));
    const Integer r = isqrt_newton(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt_newton(0) == 0);
  CHECK(isqrt_newton(1) == 1);
  CHECK(isqrt_newton(99) == 9);
  CHECK(isqrt_newton(100) == 10);
  CHECK_THROWS_AS(isqrt_newton(-4), DomainError);
}

TEST_CASE("scientific rendering") {
  CHECK(scientific(Rational(32, ipow(Integer(10), 34))) == "3.2e-33");
  CHECK(scientific(Rational(-5)) == "5.0e+0");
  CHECK(scientific(make_rational(1, 3)) == "3.3e-1");
  CHECK(scientific(Rational(0)) == "0");
  CHECK(scientific(Rational(123456), 3) == "1.23e+5");
}

TEST_CASE("alternating acceleration") {
  // sum (-1)^k / (k+1) = log 2
  std::vector<Rational> t;
  for (int k = 0; k < 30; ++k) t.emplace_back(k % 2 == 0 ? 1 : -1, k + 1);
  const Rational log2(Integer("693147180559945309417232121458176568"), ipow(Integer(10), 36));
  CHECK(abs(Rational(crvz_sum(t, 25) - log2)) < pow10_inv(17));
  // sum (-1)^k / (2k+1) = pi / 4
  std::vector<Rational> u;
  for (int k = 0; k < 40; ++k) u.emplace_back(k % 2 == 0 ? 1 : -1, 2 * k + 1);
  const PrecisionContext ctx(40);
  const Rational pi(ctx.pi_scaled(), ipow(Integer(10), ctx.working_digits()));
  CHECK(abs(Rational(4 * crvz_sum(u, 40) - pi)) < pow10_inv(28));
  CHECK_THROWS_AS(crvz_sum(u, 41), DomainError);
  CHECK_THROWS_AS(crvz_sum(u, 0), DomainError);
}

TEST_CASE("seed and generated series") {
  const PrecisionContext ctx(100, {3, 95});
  const Catalog* cat = &test::catalog();
  {
    const SeedIdentity s = load_seed(test::data("seeds/domb_m64.json"), cat);
    const SeriesReport r = verify_series(s.weight, s.constant(), terms_for(s, 200), 200, ctx, false, pow10_inv(30));
    CHECK(r.pass);
    CHECK(r.target == "8*sqrt(3)/(3*pi)");
    CHECK(r.partial_terms == 200);
  }
  {
    const SeedIdentity s = load_seed(test::data("seeds/franel4_m5776.json"), cat);
    const SeriesReport r = verify_series(s.weight, s.constant(), terms_for(s, 60), 60, ctx, false, pow10_inv(30));
    CHECK(r.pass);
    // The n^3 identity derived from this seed, summed the same way.
    const NewIdentity id = generate(s, P("n^3"));
    const SeriesReport g =
        verify_series(id.normalized_weight, id.constant(), terms_for(s, 60), 60, ctx, false, pow10_inv(30));
    CHECK(g.pass);
  }
  {
    const SeedIdentity s = load_seed(test::data("seeds/domb_m-32.json"), cat);
    const auto F = terms_for(s, 200);
    CHECK(verify_series(s.weight, s.constant(), F, 200, ctx, false, pow10_inv(30)).pass);
    const SeriesConstant c{make_rational(4, 3), 1, ConstantKind::RationalOverPi};
    const SeriesReport acc = verify_series(P("n^2*(n-1)*(9*n+1)"), c, F, 200, ctx, true, pow10_inv(8));
    CHECK(acc.pass);
    CHECK(acc.accelerated);
    // A short accelerated sum still meets the loose tolerance.
    CHECK(verify_series(P("n^2*(n-1)*(9*n+1)"), c, F, 40, ctx, true, pow10_inv(8)).pass);
    // A wrong constant is rejected.
    const SeriesConstant wrong{make_rational(5, 3), 1, ConstantKind::RationalOverPi};
    CHECK_FALSE(verify_series(P("n^2*(n-1)*(9*n+1)"), wrong, F, 200, ctx, true, pow10_inv(8)).pass);
  }
}

TEST_CASE("zero weight sums to zero exactly") {
  const PrecisionContext ctx(30);
  const std::vector<Rational> F(11, Rational(7));
  const SeriesReport r = verify_series(UniPoly{}, SeriesConstant{0, 1, ConstantKind::RationalConstant}, F, 10, ctx,
                                       false, pow10_inv(30));
  CHECK(r.partial_sum == 0);
  CHECK(r.pass);
  CHECK(r.target == "0");
  CHECK(r.abs_residual == "<1e-30");
}

TEST_CASE("residual decreases with N until the conversion floor") {
  const PrecisionContext ctx(40, {3});
  const SeedIdentity s = load_seed(test::data("seeds/domb_m64.json"), &test::catalog());
  const auto F = terms_for(s, 160);
  const Rational floor = pow10_inv(40);
  Rational previous = -1;
  for (long N : {5L, 10L, 20L, 40L, 80L, 160L}) {
    const SeriesReport r = verify_series(s.weight, s.constant(), F, N, ctx, false, 1);
    const Integer scaled = target_scaled(s.constant(), ctx);
    const Rational diff = abs(Rational(r.partial_sum - Rational(scaled, ipow(Integer(10), ctx.working_digits()))));
    if (previous >= 0 && previous >= floor) CHECK(diff < previous);
    previous = diff;
  }
  CHECK(previous < floor);
}

TEST_CASE("insufficient terms are reported") {
  const PrecisionContext ctx(30, {3});
  const SeedIdentity s = load_seed(test::data("seeds/domb_m64.json"), &test::catalog());
  const auto F = terms_for(s, 5);
  const SeriesReport r = verify_series(s.weight, s.constant(), F, 5, ctx, false, pow10_inv(30));
  CHECK_FALSE(r.pass);
  CHECK(r.note == "N too small for the requested tolerance");
  CHECK_THROWS_AS(verify_series(s.weight, s.constant(), F, 6, ctx, false, pow10_inv(30)), DomainError);
  CHECK_THROWS_AS(verify_series(s.weight, s.constant(), F, 0, ctx, false, pow10_inv(30)), DomainError);
  const Json j = series_report_to_json(r);
  CHECK(j.contains("target"));
  CHECK(j.contains("partial_terms"));
  CHECK(j.contains("abs_residual"));
  CHECK(j.contains("pass"));
}
