#include <doctest.h>

#include <vector>

#include "generators.hpp"
#include "tnomial/bipoly.hpp"
#include "tnomial/exact.hpp"
#include "tnomial/quad.hpp"
#include "tnomial/ring.hpp"
#include "tnomial/series.hpp"

using namespace tnomial;
using tnomial::testing::random_bipoly;
using tnomial::testing::random_quad;
using tnomial::testing::uniform;

TEST_CASE("exact_div") {
  CHECK(exact_div(30, 2) == 15);
  CHECK(exact_div(6175, 25) == 247);
  CHECK(exact_div(-12, 4) == -3);
  CHECK_THROWS_AS(exact_div(7, 2), DivisibilityError);
  CHECK_THROWS_AS(exact_div(7, 0), DivisibilityError);
  try {
    exact_div(7, 2);
  } catch (const DivisibilityError& e) {
    CHECK(e.dividend() == 7);
    CHECK(e.divisor() == 2);
  }
}

TEST_CASE("ipow, binomial, choose2") {
  CHECK(ipow(0, 0) == 1);
  CHECK(ipow(-2, 3) == -8);
  CHECK(ipow(3, 40) == BigInt("12157665459056928801"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(choose2(0) == 0);
  CHECK(choose2(1) == 0);
  CHECK(choose2(4) == 6);
}

TEST_CASE("rational normalizes eagerly") {
  CHECK(Rational(16, 10) + Rational(2, 5) == Rational(2));
  CHECK((Rational(16, 10) + Rational(2, 5)).str() == "2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(1) / Rational(-2) == Rational(-1, 2));
  CHECK(Rational(7, 3).den() == 3);
  CHECK_THROWS_AS(Rational(1, 0), DivisibilityError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisibilityError);
  CHECK_THROWS_AS(Rational(1, 2).to_integer(), DivisibilityError);
  CHECK(Rational(8, -4).to_integer() == -2);
}

TEST_CASE("bipoly arithmetic and canonical order") {
  const BiPoly p = BiPoly::p();
  const BiPoly q = BiPoly::q();
  CHECK((p + q) * (p - q) == p * p - q * q);
  CHECK(((p + q) * (p - q)).str() == "p^2 - q^2");
  const BiPoly c42 = p * p * p * p + p * p * p * q + BiPoly(2) * p * p * q * q + p * q * q * q + q * q * q * q;
  CHECK(c42.str() == "p^4 + p^3*q + 2*p^2*q^2 + p*q^3 + q^4");
  CHECK(c42.eval(2, 3) == 247);
  CHECK(c42.is_homogeneous(4));
  CHECK_FALSE((c42 + BiPoly(1)).is_homogeneous(4));
  CHECK(BiPoly().str() == "0");
  CHECK((p - p).is_zero());
  CHECK((BiPoly(-3) * q).str() == "-3*q");
  CHECK((p * q * BiPoly(2)).swapped() == BiPoly(2) * p * q);
  CHECK((p * p * q).swapped() == p * q * q);
  CHECK(c42.coeff({2, 2}) == 2);
  CHECK(c42.coeff({3, 3}) == 0);
}

TEST_CASE("quadratic ring") {
  const QuadElem t = QuadElem::phi_plus(1);
  CHECK(t * (QuadElem::integer(1, 1) - t) == QuadElem::integer(-1, 1));
  for (long alpha = 1; alpha <= 3; ++alpha) {
    const QuadElem pp = QuadElem::phi_plus(alpha);
    const QuadElem pm = QuadElem::phi_minus(alpha);
    CHECK(pp * pm == QuadElem::integer(-1, alpha));
    CHECK(pp + pm == QuadElem::integer(alpha, alpha));
    CHECK(pp * pp == QuadElem(1, alpha, alpha));
  }
  CHECK_THROWS_AS(QuadElem::phi_plus(1) + QuadElem::phi_plus(2), ParameterError);
  CHECK_THROWS_AS(QuadElem(1, 1, 0), ParameterError);
}

TEST_CASE("series products") {
  using S = XSeries<BigInt>;
  const std::vector<S> two{S::linear(1, -2, 3), S::linear(1, -3, 3)};
  CHECK(series_product<BigInt>(two, 3).coeffs() == std::vector<BigInt>{1, -5, 6});
  CHECK(S::geometric(1, 4).coeffs() == std::vector<BigInt>{1, 1, 1, 1});
  const std::vector<S> four{S::linear(1, -2, 5), S::linear(1, -3, 5), S::geometric(2, 5), S::geometric(3, 5)};
  CHECK(series_product<BigInt>(four, 5) == S::constant(1, 5));
  CHECK(series_product<BigInt>(std::vector<S>{}, 3) == S::constant(1, 3));
  CHECK((S::linear(1, 1, 2) * S::linear(1, 1, 4)).order() == 2);
}

// ---------------------------------------------------------------------------
// Properties on random small operands.

TEST_CASE("property: bipoly ring axioms and evaluation homomorphism") {
  for (int trial = 0; trial < 300; ++trial) {
    const BiPoly a = random_bipoly();
    const BiPoly b = random_bipoly();
    const BiPoly c = random_bipoly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == BiPoly());
    const long p0 = uniform(-4, 4);
    const long q0 = uniform(-4, 4);
    CHECK((a * b).eval(p0, q0) == a.eval(p0, q0) * b.eval(p0, q0));
    CHECK((a + b).eval(p0, q0) == a.eval(p0, q0) + b.eval(p0, q0));
    CHECK(a.swapped().swapped() == a);
  }
}

TEST_CASE("property: rational field axioms") {
  for (int trial = 0; trial < 300; ++trial) {
    auto gen = [] {
      long den = uniform(-9, 9);
      return Rational(uniform(-20, 20), den == 0 ? 1 : den);
    };
    const Rational a = gen();
    const Rational b = gen();
    const Rational c = gen();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!(b == Rational(0))) {
      CHECK((a / b) * b == a);
    }
    CHECK(a.den() > 0);
  }
}

TEST_CASE("property: quadratic ring axioms and norms") {
  for (int trial = 0; trial < 300; ++trial) {
    const long alpha = uniform(1, 4);
    const QuadElem a = random_quad(alpha);
    const QuadElem b = random_quad(alpha);
    const QuadElem c = random_quad(alpha);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const QuadElem n = a * a.conjugate();
    CHECK(n.is_integer());
    CHECK(n.a() == a.norm());
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("property: truncated product matches the full product") {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigInt> a(static_cast<std::size_t>(uniform(1, 6)));
    std::vector<BigInt> b(static_cast<std::size_t>(uniform(1, 6)));
    for (auto& x : a) x = uniform(-5, 5);
    for (auto& x : b) x = uniform(-5, 5);
    std::vector<BigInt> full(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        full[i + j] += a[i] * b[j];
      }
    }
    const std::size_t order = static_cast<std::size_t>(uniform(1, 12));
    const auto product = XSeries<BigInt>(a, order) * XSeries<BigInt>(b, order);
    for (std::size_t j = 0; j < order; ++j) {
      CHECK(product[j] == (j < full.size() ? full[j] : BigInt(0)));
    }
  }
}
