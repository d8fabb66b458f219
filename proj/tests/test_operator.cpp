#include <doctest.h>

#include <random>

#include "holo/error.hpp"
#include "holo/operator.hpp"
#include "support.hpp"

using namespace holo;
using holo::test::P;

namespace {

RecOperator random_operator(std::mt19937_64& rng, int J, int D) {
  std::vector<UniPoly> a;
  for (int i = 0; i <= J; ++i) a.push_back(test::random_poly(rng, D, 6));
  return RecOperator(std::move(a));
}

RecOperator domb_family(long m) {
  return RecOperator({P("64*(n+1)^3"), Rational(-2 * m) * P("(2*n+3)*(5*n^2+15*n+12)"), Rational(m * m) * P("(n+2)^3")});
}

}  // namespace

TEST_CASE("operators are normalized on construction") {
  const RecOperator a({P("2*n+2"), P("-4")});
  const RecOperator b({P("-n-1"), P("2")});
  CHECK(a == b);
  CHECK(a.coeff(1) == UniPoly::constant(2));
  CHECK(RecOperator({P("1/2*n"), P("1/3")}).coeffs() == std::vector<UniPoly>{P("3*n"), P("2")});
  CHECK_THROWS_AS(RecOperator({P("n"), UniPoly{}}), DomainError);
  CHECK_THROWS_AS(RecOperator({}), DomainError);
  CHECK(to_string(RecOperator({P("-1"), P("1")})) == "S + (-1)");
}

TEST_CASE("adjoint goldens") {
  CHECK(adjoint_apply(test::franel_op(), UniPoly::constant(1)) == P("-3*(3*k+2)", "k"));
  CHECK(adjoint_apply(test::delannoy_op(), UniPoly::constant(1)) == P("-4*k-2", "k"));
  const UniPoly q = adjoint_apply(test::domb_m32_op(), P("n"));
  CHECK(q == P("27*n^4-24*n^3-3*n^2-6*n-2"));
  CHECK(q(Rational(1)) == -8);
  CHECK(make_rational(2, 3) * P("3*n+1") + make_rational(1, 3) * q == P("n^2*(n-1)*(9*n+1)"));
}

TEST_CASE("certificate for the Domb operator") {
  const Certificate c = certificate(test::domb_m32_op(), UniPoly::constant(1));
  REQUIRE(c.u.size() == 2);
  CHECK(c.u[0] == P("26*n^3+15*n^2+9*n+2"));
  CHECK(c.u[1] == P("16*(n+1)^3"));
}

TEST_CASE("difference Lagrange identity holds exactly") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> order(1, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int t = 0; t < 100; ++t) {
    const int J = order(rng);
    const RecOperator L = random_operator(rng, J, deg(rng));
    const UniPoly p = test::random_poly(rng, deg(rng) + 1);
    std::vector<Rational> F(41 + J + 1);
    for (auto& x : F) x = test::random_rational(rng, 50);
    const UniPoly q = adjoint_apply(L, p);
    const Certificate cert = certificate(L, p);
    auto U = [&](long n) {
      Rational s = 0;
      for (int i = 0; i < J; ++i) s += cert.u[static_cast<std::size_t>(i)](Rational(n)) * F[static_cast<std::size_t>(n + i)];
      return s;
    };
    for (long n = 0; n <= 40; ++n) {
      Rational LF = 0;
      for (int i = 0; i <= J; ++i) LF += L.coeff(i)(Rational(n)) * F[static_cast<std::size_t>(n + i)];
      const Rational lhs = p(Rational(n)) * LF - q(Rational(n)) * F[static_cast<std::size_t>(n)];
      REQUIRE(lhs == U(n + 1) - U(n));
    }
  }
}

TEST_CASE("adjoint is linear") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const RecOperator L = random_operator(rng, 2, 2);
    const UniPoly p = test::random_poly(rng, 3);
    const UniPoly r = test::random_poly(rng, 4);
    const Rational a = test::random_rational(rng);
    const Rational b = test::random_rational(rng);
    CHECK(adjoint_apply(L, a * p + b * r) == a * adjoint_apply(L, p) + b * adjoint_apply(L, r));
  }
}

TEST_CASE("degree analysis of the Domb family") {
  for (long m : {1L, -32L, 64L, 5L, -1L}) {
    const DegreeData dd = degree_data(domb_family(m));
    CHECK(dd.d == 3);
    CHECK(dd.degenerate_degrees.empty());
    CHECK(dd.indicial.is_constant());
  }
  const DegreeData d4 = degree_data(domb_family(4));
  CHECK(d4.d == 2);
  CHECK(d4.degenerate_degrees.empty());
  CHECK(primitive_form(d4.indicial).primitive == P("2*s+3", "s"));
  const DegreeData d16 = degree_data(domb_family(16));
  CHECK(d16.d == 2);
  CHECK(d16.degenerate_degrees.empty());
}

TEST_CASE("degree analysis of the Franel operator and of S - 1") {
  const DegreeData fr = degree_data(test::franel_op());
  CHECK(fr.d == 1);
  CHECK(fr.b == std::vector<UniPoly>{P("-9*k-6", "k"), P("-9*k^2-25*k-14", "k"), P("-8*k^2-16*k-8", "k")});
  CHECK(fr.indicial == P("-9*(s+1)", "s"));
  CHECK_FALSE(fr.degenerated);

  const DegreeData diff = degree_data(RecOperator({P("-1"), P("1")}));
  CHECK(diff.d == -1);
  CHECK(diff.indicial == P("-s", "s"));
  CHECK(diff.degenerate_degrees == std::set<Integer>{0});
  CHECK(diff.degenerated);
}

TEST_CASE("degree lemma on random operators") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> order(1, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const RecOperator L = random_operator(rng, order(rng), deg(rng));
    const DegreeData dd = degree_data(L);
    for (int s = 0; s <= 5; ++s) {
      const UniPoly p = test::random_poly(rng, s);
      const Degree got = adjoint_apply(L, p).degree();
      if (dd.degenerate_degrees.contains(Integer(s)) || dd.d + s < 0) {
        CHECK(got < Degree(dd.d + s));
      } else {
        CHECK(got == Degree(dd.d + s));
        ++checked;
      }
    }
  }
  CHECK(checked > 300);
  // S - 1 is degenerated at s = 0: L*(1) = 0, below d + 0 = -1.
  const RecOperator diff({P("-1"), P("1")});
  CHECK(adjoint_apply(diff, UniPoly::constant(1)).is_zero());
  for (unsigned s = 1; s <= 6; ++s) CHECK(adjoint_apply(diff, UniPoly::monomial(s)).degree() == Degree(static_cast<int>(s) - 1));
}

TEST_CASE("shift coprimality") {
  CHECK(shift_coprime_check(test::domb_m32_op()).coprime);
  CHECK(shift_coprime_check(test::franel_op()).coprime);
  const CoprimeCheck bad = shift_coprime_check(RecOperator({P("n*(n+1)"), P("1"), P("n-3")}));
  CHECK_FALSE(bad.coprime);
  CHECK(bad.violations == std::set<Integer>{3, 4});
  CHECK_THROWS_AS(shift_coprime_check(RecOperator({UniPoly{}, P("n")})), InapplicableError);
}

TEST_CASE("scaling operators") {
  const RecOperator raw({P("64*(n+1)^3"), P("-2*(2*n+3)*(5*n^2+15*n+12)"), P("(n+2)^3")});
  CHECK(scale_operator(raw, make_rational(-1, 32)) == test::domb_m32_op());
  CHECK(scale_operator(raw, make_rational(1, 64)) ==
        RecOperator({P("(n+1)^3"), P("-2*(2*n+3)*(5*n^2+15*n+12)"), P("64*(n+2)^3")}));
  CHECK_THROWS_AS(scale_operator(raw, 0), DomainError);
  std::mt19937_64 rng(14);
  for (int t = 0; t < 50; ++t) {
    const RecOperator L = random_operator(rng, 1 + t % 3, 2);
    Rational r = test::random_rational(rng);
    if (r == 0) r = 3;
    CHECK(scale_operator(scale_operator(L, r), 1 / r) == L);
  }
}
