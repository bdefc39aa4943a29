#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "ratri/errors.hpp"
#include "ratri/rational.hpp"

using ratri::Int;
using ratri::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("reduce canonicalizes") {
  CHECK(ratri::reduce(56, 48) == Rational(7, 6));
  CHECK(ratri::reduce(3, -4) == Rational(-3, 4));
  CHECK(ratri::reduce(3, -4).den() == 4);
  CHECK(ratri::reduce(3, -4).num() == -3);
  CHECK(ratri::reduce(0, 5) == Rational(0, 1));
  CHECK(ratri::reduce(0, 5).den() == 1);
  CHECK_THROWS_AS(ratri::reduce(1, 0), std::domain_error);
}

TEST_CASE("reduce is idempotent on random inputs") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long long> dist(-100000, 100000);
  for (int i = 0; i < 300; ++i) {
    long long p = dist(rng);
    long long q = dist(rng);
    if (q == 0) continue;
    Rational once = ratri::reduce(Int(p), Int(q));
    Rational twice = ratri::reduce(once.num(), once.den());
    CHECK(once == twice);
    CHECK(once.den() > 0);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(once.num()),
                                     once.den()) == 1);
  }
}

TEST_CASE("arithmetic matches the worked values") {
  CHECK(Rational(3, 4) + Rational(5, 12) == Rational(7, 6));
  CHECK(Rational(5, 4) * Rational(13, 12) == Rational(65, 48));
  CHECK(Rational(7, 6) <=> Rational(7, 6) == std::strong_ordering::equal);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("arithmetic agrees with an independent rational type") {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<long long> dist(-5000, 5000);
  for (int i = 0; i < 300; ++i) {
    long long pn = dist(rng), qn = dist(rng);
    long long pd = dist(rng), qd = dist(rng);
    if (pd == 0 || qd == 0) continue;
    Rational x(Int(pn), Int(pd));
    Rational y(Int(qn), Int(qd));
    oracle::cpp_rational ox(pn, pd), oy(qn, qd);
    CHECK(oracle::matches(x + y, ox + oy));
    CHECK(oracle::matches(x - y, ox - oy));
    CHECK(oracle::matches(x * y, ox * oy));
    if (qn != 0) CHECK(oracle::matches(x / y, ox / oy));
    CHECK((x < y) == (ox < oy));
    CHECK((x == y) == (ox == oy));
  }
}

TEST_CASE("isqrt basics") {
  auto r49 = ratri::isqrt(49);
  CHECK(r49.root == 7);
  CHECK(r49.exact);
  auto r50 = ratri::isqrt(50);
  CHECK(r50.root == 7);
  CHECK_FALSE(r50.exact);
  auto r4225 = ratri::isqrt(4225);  // 33^2 + 56^2
  CHECK(r4225.root == 65);
  CHECK(r4225.exact);
  CHECK(ratri::isqrt(0).root == 0);
  CHECK(ratri::isqrt(0).exact);
  CHECK(ratri::isqrt(1).root == 1);
  CHECK_THROWS_AS(ratri::isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt brackets its input, including huge values") {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<int> digits(1, 45);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int i = 0; i < 200; ++i) {
    std::string text(1, static_cast<char>('1' + digit(rng) % 9));
    int len = digits(rng);
    for (int k = 1; k < len; ++k) text += static_cast<char>('0' + digit(rng));
    Int n(text);
    auto r = ratri::isqrt(n);
    CHECK(r.root * r.root <= n);
    CHECK((r.root + 1) * (r.root + 1) > n);
    CHECK(r.exact == (r.root * r.root == n));
    // Independent route: boost's exact integer sqrt.
    CHECK(r.root == boost::multiprecision::sqrt(n));
  }
}

TEST_CASE("is_rational_square extracts exact roots") {
  auto root = ratri::is_rational_square(Rational(49, 144));
  REQUIRE(root.has_value());
  CHECK(*root == Rational(7, 12));
  CHECK_FALSE(ratri::is_rational_square(Rational(2)).has_value());
  auto zero = ratri::is_rational_square(Rational(0));
  REQUIRE(zero.has_value());
  CHECK(*zero == Rational(0));
  CHECK_FALSE(ratri::is_rational_square(Rational(-4)).has_value());
}

TEST_CASE("is_rational_square inverts squaring") {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<long long> dist(0, 100000);
  for (int i = 0; i < 300; ++i) {
    long long p = dist(rng);
    long long q = dist(rng) + 1;
    Rational t(Int(p), Int(q));
    auto root = ratri::is_rational_square(t * t);
    REQUIRE(root.has_value());
    CHECK(*root == t);
  }
}

TEST_CASE("non-square integers are rejected") {
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<long long> dist(2, 1000000);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 200; ++i) {
    Int k(dist(rng));
    auto r = ratri::isqrt(k);
    if (r.exact) continue;  // skip the occasional perfect square
    ++checked;
    CHECK_FALSE(ratri::is_rational_square(Rational(k)).has_value());
  }
  CHECK(checked >= 100);
}

TEST_CASE("canonical text form") {
  CHECK(Rational(7, 6).str() == "7/6");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(5).str() == "5/1");
}

TEST_CASE("parse accepts p/q and bare integers") {
  CHECK(Rational::parse("7/6") == Rational(7, 6));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("0/1") == Rational(0));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK_THROWS_AS(Rational::parse("abc"), ratri::ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/"), ratri::ValidationError);
  CHECK_THROWS_AS(Rational::parse("/4"), ratri::ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/-4"), ratri::ValidationError);
  CHECK_THROWS_AS(Rational::parse(""), ratri::ValidationError);
  CHECK_THROWS_AS(Rational::parse("3/0"), std::domain_error);
}

TEST_CASE("str/parse round trip") {
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    long long p = dist(rng);
    long long q = dist(rng);
    if (q == 0) continue;
    Rational x(Int(p), Int(q));
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_SUITE_END();
