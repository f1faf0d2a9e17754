#include <doctest.h>

#include <cmath>
#include <random>

#include "entcert/error.hpp"
#include "entcert/exact.hpp"
#include "support.hpp"

using namespace entcert;
using testing::gr;

TEST_CASE("arithmetic examples") {
  CHECK(gr("1+i") * gr("1-i") == GaussianRational(2));
  CHECK(gr("1/2+1/3i") + gr("1/2-1/3i") == GaussianRational(1));
  GaussianRational q = GaussianRational(-2) / gr("1+i");
  CHECK(q == gr("-1+i"));
  CHECK(q * gr("1+i") == GaussianRational(-2));
  CHECK_THROWS_AS(gr("3") / GaussianRational(0), Error);
  try {
    (void)(gr("3") / GaussianRational(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("conjugation") {
  CHECK(conj(gr("1+i")) == gr("1-i"));
  CHECK(conj(GaussianRational(3)) == GaussianRational(3));
  CHECK(conj(gr("0-5/7i")) == gr("5/7i"));
  CHECK(gr("3-4i").norm2() == Rational(25));
}

TEST_CASE("rationals are kept in lowest terms") {
  Rational r(6, -8);
  CHECK(r.str() == "-3/4");
  CHECK(r.den() == 4);
  CHECK(Rational(10, 5).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK(Rational::parse("-12/18") == Rational(-2, 3));
}

TEST_CASE("canonical rendering") {
  CHECK(GaussianRational(1).str() == "1");
  CHECK(GaussianRational(-2).str() == "-2");
  CHECK(gr("1/2-3i").str() == "1/2-3i");
  CHECK(GaussianRational::i().str() == "0+1i");
  CHECK(gr("-i").str() == "0-1i");
  CHECK(gr("2i").str() == "0+2i");
  CHECK(gr("-3+2i").str() == "-3+2i");
  CHECK(gr("4/6+2/4i").str() == "2/3+1/2i");
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "1/", "1+", "x", "1/0", "1+2j", "i+1", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GaussianRational::parse(bad), Error);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (int t = 0; t < 10000; ++t) {
    auto a = testing::random_gr(rng, 9, 7), b = testing::random_gr(rng, 9, 7), c = testing::random_gr(rng, 9, 7);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(conj(conj(a)) == a);
    REQUIRE(conj(a * b) == conj(a) * conj(b));
    if (!a.is_zero()) {
      REQUIRE(a * a.inverse() == GaussianRational(1));
      REQUIRE((b / a) * a == b);
    }
    REQUIRE(GaussianRational::parse(a.str()) == a);
  }
}

TEST_CASE("float conversion is correctly rounded") {
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK(Rational(-2, 7).to_double() == -2.0 / 7.0);
  mpz_class big("123456789012345678901234567890");
  CHECK(Rational(big, mpz_class(1)).to_double() == 123456789012345678901234567890.0);
  CHECK(gr("1/4-3/8i").to_complex() == std::complex<double>(0.25, -0.375));
}

TEST_CASE("gaussian integer helpers") {
  GaussInt a{mpz_class(3), mpz_class(1)}, b{mpz_class(1), mpz_class(1)};
  GaussInt p = a * b;
  CHECK(exact_div(p, b) == a);
  GaussInt g = gcd(p, GaussInt{mpz_class(2), mpz_class(0)});
  CHECK(g.norm() == 4);
  CHECK(g.re > 0);
  CHECK(integer_content(GaussInt{mpz_class(6), mpz_class(-9)}) == 3);
  CHECK(denominator_lcm(gr("1/4+5/6i")) == 12);
}

TEST_CASE("rational reconstruction") {
  CHECK(rational_reconstruct(0.75, 100) == Rational(3, 4));
  CHECK(rational_reconstruct(-1.0 / 3.0, 100) == Rational(-1, 3));
  CHECK(rational_reconstruct(2.0, 10) == Rational(2));
}
