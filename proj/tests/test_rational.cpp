#include <algorithm>
#include <random>

#include "doctest.h"
#include "hypercong/errors.hpp"
#include "hypercong/rational.hpp"

using namespace hypercong;

TEST_CASE("make_rational reduces and normalizes the sign") {
  CHECK(make_rational(Int(4), Int(18)) == rat(2, 9));
  CHECK(make_rational(Int(3), Int(-6)) == rat(-1, 2));
  CHECK(make_rational(Int(0), Int(7)) == 0);
  CHECK_THROWS_AS(make_rational(Int(1), Int(0)), ZeroDenominatorError);
}

TEST_CASE("parse_rational accepts 'a' and 'a/b' only") {
  CHECK(parse_rational("-1/2") == rat(-1, 2));
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("4/18") == rat(2, 9));
  CHECK_THROWS_AS(parse_rational("1/-2"), ConfigError);
  CHECK_THROWS_AS(parse_rational("x"), ConfigError);
  CHECK_THROWS_AS(parse_rational(""), ConfigError);
  CHECK_THROWS_AS(parse_rational("+1"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1/0"), ZeroDenominatorError);
  CHECK(to_string(rat(-1, 2)) == "-1/2");
  CHECK(to_string(Rat(7)) == "7");
}

TEST_CASE("p-integrality") {
  CHECK(is_p_integral(rat(3, 4), 5));
  CHECK(!is_p_integral(rat(3, 10), 5));
  CHECK(is_p_integral(Rat(0), 3));
}

TEST_CASE("valuation of rationals") {
  CHECK(valuation(rat(50, 3), 5) == 2);
  CHECK(valuation(rat(1, 25), 5) == -2);
  CHECK(!valuation(Rat(0), 7).has_value());
  CHECK(!valuation(Int(0), 7).has_value());
  CHECK(valuation(Int(360), 3) == 2);
}

TEST_CASE("valuation is additive and ultrametric") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
  for (long p : {3L, 5L, 11L}) {
    for (int i = 0; i < 300; ++i) {
      Rat a = make_rational(Int(num(rng)), Int(den(rng)));
      Rat b = make_rational(Int(num(rng)), Int(den(rng)));
      if (a == 0 || b == 0) continue;
      CHECK(*valuation(a * b, p) == *valuation(a, p) + *valuation(b, p));
      if (a + b != 0) {
        long va = *valuation(a, p);
        long vb = *valuation(b, p);
        long vs = *valuation(a + b, p);
        CHECK(vs >= std::min(va, vb));
        if (va != vb) CHECK(vs == std::min(va, vb));
      }
    }
  }
}

TEST_CASE("factorial and harmonic numbers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(3) == rat(11, 6));
  CHECK(harmonic(5) == rat(137, 60));
  Rat direct(0);
  for (long j = 1; j <= 25; ++j) direct += rat(1, j);
  CHECK(harmonic(25) == direct);
}

TEST_CASE("factorial_valuation matches the factorial's valuation") {
  for (long p : {2L, 3L, 5L, 13L})
    for (unsigned long k : {0ul, 1ul, 4ul, 25ul, 121ul, 200ul})
      CHECK(factorial_valuation(k, p) == valuation(factorial(k), p).value_or(0));
}

TEST_CASE("pochhammer and rational binomials") {
  CHECK(pochhammer(rat(1, 2), 0) == 1);
  CHECK(pochhammer(rat(1, 2), 2) == rat(3, 4));
  CHECK(pochhammer(Rat(1), 4) == 24);
  CHECK(binomial_rational(Rat(5), 0) == 1);
  CHECK(binomial_rational(rat(-1, 2), 1) == rat(-1, 2));
  CHECK(binomial_rational(rat(-1, 3), 2) == rat(2, 9));
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binom(-x,k) (-1)^k k! equals the rising factorial") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    Rat x = make_rational(Int(num(rng)), Int(den(rng)));
    auto k = static_cast<unsigned long>(rng() % 31);
    Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
    CHECK(binomial_rational(-x, k) * sign * Rat(factorial(k)) == pochhammer(x, k));
  }
}
