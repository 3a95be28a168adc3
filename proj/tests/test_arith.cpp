#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hosoya/arith.hpp"

using hosoya::Int;
using hosoya::Rational;

TEST_CASE("rational normalization") {
  CHECK(Rational(Int(2), Int(4)) == Rational(Int(1), Int(2)));
  CHECK(Rational(Int(-2), Int(-4)) == Rational(Int(1), Int(2)));
  CHECK(Rational(Int(2), Int(-4)).numerator() == -1);
  CHECK(Rational(Int(2), Int(-4)).denominator() == 2);
  CHECK(Rational(Int(0), Int(-7)) == Rational(0));
  CHECK(Rational(Int(0), Int(5)).denominator() == 1);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("rational rendering") {
  CHECK(Rational(Int(3), Int(4)).str() == "3/4");
  CHECK(Rational(Int(8), Int(4)).str() == "2");
  CHECK(Rational(Int(-5), Int(10)).str() == "-1/2");
  CHECK(Rational(Int(1), Int(2)).decimal_str() == "0.500000");
  CHECK(Rational(Int(-1), Int(3)).decimal_str() == "-0.333333");
  CHECK(Rational(Int(2), Int(3)).decimal_str() == "0.666667");
  CHECK(Rational(15).decimal_str() == "15.000000");
}

TEST_CASE("rational arithmetic against cross-multiplication identities") {
  // independent route: compare a/b op c/d with raw integer cross products
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 30);
  for (int iter = 0; iter < 2000; ++iter) {
    long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x{Int(a), Int(b)}, y{Int(c), Int(d)};

    Rational sum = x + y;
    CHECK(sum.numerator() * (b * d) == (a * d + c * b) * sum.denominator());
    Rational diff = x - y;
    CHECK(diff.numerator() * (b * d) == (a * d - c * b) * diff.denominator());
    Rational prod = x * y;
    CHECK(prod.numerator() * (b * d) == (a * c) * prod.denominator());
    if (c != 0) {
      Rational quot = x / y;
      CHECK(quot.numerator() * (b * c) == (a * d) * quot.denominator());
    }
    CHECK(boost::multiprecision::gcd(sum.numerator(), sum.denominator()) == 1);
    CHECK(sum.denominator() > 0);
    CHECK((x < y) == (a * d < c * b));
  }
}

TEST_CASE("division by zero rational") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("half_power") {
  CHECK(hosoya::half_power(0) == Rational(1));
  CHECK(hosoya::half_power(3) == Rational(Int(1), Int(8)));
  CHECK(hosoya::half_power(130).denominator() == Int(1) << 130);
}
