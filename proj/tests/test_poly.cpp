#include <doctest.h>

#include <random>

#include "factor.hpp"
#include "holo/error.hpp"
#include "holo/linalg.hpp"
#include "holo/poly.hpp"
#include "support.hpp"

using namespace holo;
using holo::test::P;

TEST_CASE("rational text form and parsing") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK(parse_rational("-10/27") == make_rational(-10, 27));
  CHECK(parse_rational("4/2") == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(bit_size(make_rational(3, 4)) == 5);
}

TEST_CASE("modular helpers") {
  CHECK(mod_floor(Integer(-7), Integer(5)) == 3);
  CHECK(mod_rational(make_rational(-2, 3), Integer(25)) == 16);  // 3*16 = 48 = -2 mod 25
  CHECK_THROWS_AS(mod_rational(make_rational(1, 3), Integer(9)), DomainError);
  CHECK(ipow(Integer(2), 100) == Integer("1267650600228229401496703205376"));
}

TEST_CASE("degree ordering") {
  CHECK(UniPoly{}.degree().is_bottom());
  CHECK(UniPoly{}.degree() < Degree(0));
  CHECK(Degree::bottom() < Degree(-5));
  CHECK((Degree::bottom() + 3).is_bottom());
  CHECK(P("n^3-n").degree() == Degree(3));
  CHECK_THROWS(Degree::bottom().value());
  CHECK(UniPoly{0, 0}.is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int t = 0; t < 200; ++t) {
    const UniPoly a = test::random_poly(rng, deg(rng));
    const UniPoly b = test::random_poly(rng, deg(rng));
    const UniPoly c = test::random_poly(rng, deg(rng));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * UniPoly::constant(1) == a);
    CHECK((a * UniPoly{}).is_zero());
    CHECK((a * b).degree() == a.degree() + b.degree().value());
  }
}

TEST_CASE("shift and evaluation") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const UniPoly p = test::random_poly(rng, t % 7);
    const Rational a = test::random_rational(rng);
    const Rational x = test::random_rational(rng);
    CHECK(p.shifted(a).shifted(-a) == p);
    CHECK(p.shifted(a)(x) == p(x + a));
    Rational naive = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) naive += p.coeffs()[i] * rpow(x, i);
    CHECK(p(x) == naive);
  }
  CHECK(P("n^2").shifted(-2) == P("n^2-4*n+4"));
  CHECK(P("n^3+n").derivative() == P("3*n^2+1"));
}

TEST_CASE("division, gcd, squarefree part, primitive form") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const UniPoly a = test::random_poly(rng, 1 + t % 6);
    const UniPoly b = test::random_poly(rng, t % 4);
    const DivResult qr = divmod(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(qr.remainder.degree() < b.degree());
  }
  CHECK_THROWS_AS(divmod(P("n"), UniPoly{}), DomainError);
  CHECK(gcd(P("(n-1)*(n-2)"), P("(n-2)*(n-3)")) == P("n-2"));
  CHECK(gcd(P("2*n+4"), UniPoly{}) == P("n+2"));
  CHECK_THROWS_AS(gcd(UniPoly{}, UniPoly{}), DomainError);
  CHECK(squarefree_part(P("(n-1)^3*(n+2)^2")) == P("(n-1)*(n+2)"));
  const PrimitiveForm pf = primitive_form(P("-3/2*n^2+6*n"));
  CHECK(pf.primitive == P("n^2-4*n"));
  CHECK(pf.scale == make_rational(-3, 2));
  CHECK(denominator_lcm(P("1/6*n+3/4")) == 12);
}

TEST_CASE("integer roots agree with brute force") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> root(-30, 30);
  std::uniform_int_distribution<int> count(0, 4);
  for (int t = 0; t < 150; ++t) {
    UniPoly p = test::random_poly(rng, t % 3, 5);  // noise factor, usually rootless
    const int r = count(rng);
    for (int i = 0; i < r; ++i) p *= UniPoly::linear(Rational(-root(rng)));
    if (p.is_zero()) continue;
    p *= test::random_rational(rng);
    if (p.is_zero()) continue;
    // Cauchy bound on |root| for the monic associate
    Rational bound = 0;
    const UniPoly m = p.monic();
    for (const auto& c : m.coeffs()) bound = std::max(bound, Rational(abs(c)));
    const long B = static_cast<long>(mpz_get_si(Integer(bound.get_num() / bound.get_den()).get_mpz_t())) + 2;
    std::set<Integer> brute;
    for (long x = -B; x <= B; ++x)
      if (p(Rational(x)) == 0) brute.insert(Integer(x));
    CHECK(integer_roots(p) == brute);
  }
  CHECK(integer_roots(P("n^2*(n-7)*(2*n+1)")) == std::set<Integer>{0, 7});
  CHECK(integer_roots(P("n^2+1")).empty());
}

TEST_CASE("dispersion agrees with brute force") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> root(-12, 12);
  for (int t = 0; t < 60; ++t) {
    UniPoly a = UniPoly::constant(1);
    UniPoly b = UniPoly::constant(1);
    for (int i = 0; i < 1 + t % 3; ++i) a *= UniPoly::linear(Rational(root(rng)));
    for (int i = 0; i < 1 + t % 2; ++i) b *= UniPoly::linear(Rational(root(rng)));
    if (t % 5 == 0) a *= P("n^2+n+1");
    if (t % 7 == 0) b *= P("n^2+3*n+3");  // (n+1)^2+(n+1)+1: shift 1 of the factor above
    std::set<Integer> brute;
    for (int i = 0; i <= 60; ++i)
      if (!gcd(a, b.shifted(i)).is_constant()) brute.insert(Integer(i));
    CHECK(dispersion(a, b) == brute);
  }
  CHECK(dispersion(P("n+1"), P("(n+2)^3")).empty());
  CHECK(dispersion(P("n+5"), P("n")) == std::set<Integer>{5});
}

TEST_CASE("shifted resultant vanishes exactly at common-root shifts") {
  const UniPoly r = shifted_resultant(P("n*(n-3)"), P("n-1"));
  // common root when i+... : b(n+i) = n+i-1 vanishes at n = 1-i; a(1-i) = 0 for i = 1, -2
  CHECK(integer_roots(r) == std::set<Integer>{-2, 1});
}

TEST_CASE("parser accepts the documented syntax") {
  CHECK(P("2n") == P("2*n"));
  CHECK(P("(n+1)(n-1)") == P("n^2-1"));
  CHECK(P("-(n+1)^2") == P("-n^2-2*n-1"));
  CHECK(P("2/3*n+1/2") == UniPoly{make_rational(1, 2), make_rational(2, 3)});
  CHECK(P("(n+1)/2") == UniPoly{make_rational(1, 2), make_rational(1, 2)});
  CHECK(P("  3 * k ^ 2 ", "k") == UniPoly{0, 0, 3});
  CHECK(P("0").is_zero());
  CHECK(P("n^0") == UniPoly::constant(1));
}

TEST_CASE("parser reports positions") {
  auto position_of = [](const std::string& text) -> long {
    try {
      parse_poly(text, "n");
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("n^-1") == 2);
  CHECK(position_of("1/n") == 2);
  CHECK(position_of("n+") == 2);
  CHECK(position_of("k+1") == 0);
  CHECK(position_of("1.5*n") == 1);
  CHECK(position_of("sin(n)") == 0);
  CHECK(position_of("(n+1") == 4);
  CHECK(position_of("n^99999") == 2);
  CHECK(position_of("n/0") == 2);
  CHECK(position_of("n $") == 2);
}

TEST_CASE("polynomial rendering") {
  const UniPoly p = P("9*n^4-8*n^3-n^2");
  CHECK(to_string(p) == "9*n^4-8*n^3-n^2");
  CHECK(to_string(p, "n", PolyStyle::Compact) == "9n^4-8n^3-n^2");
  CHECK(to_string(P("2/3*k+1", "k"), "k") == "2/3*k+1");
  CHECK(to_string(UniPoly{}) == "0");
  for (const char* s : {"-n^5+1/7*n-3", "n", "-1", "12*n^2+n"}) CHECK(to_string(P(s)) == s);
}

TEST_CASE("factorization and divisors") {
  using detail::factor;
  const auto f = factor(Integer("600851475143"));
  CHECK(f == std::map<Integer, unsigned>{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}});
  const Integer semiprime = Integer("1000000007") * Integer("998244353");
  CHECK(factor(semiprime).size() == 2);
  CHECK(detail::divisors(Integer(-12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
  CHECK(detail::is_probable_prime(Integer("1000000007")));
}

TEST_CASE("exact nullspace") {
  Matrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 7;
  const auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  for (auto x : multiply(m, basis[0])) CHECK(x == 0);
  CHECK(basis[0][1] == 1);
}
