#include <doctest.h>

#include <string>
#include <vector>

#include "oracle.hpp"
#include "ratri/errors.hpp"
#include "ratri/pythagorean.hpp"

using ratri::Int;
using ratri::PythTriple;
using ratri::Rational;

namespace {

// The six primitive triples with m <= 5, in generation order.
struct Row {
  int d, m, n, a, b, c;
};
const Row kTable[] = {
    {1, 2, 1, 3, 4, 5},   {1, 3, 2, 5, 12, 13},  {1, 4, 1, 15, 8, 17},
    {1, 4, 3, 7, 24, 25}, {1, 5, 2, 21, 20, 29}, {1, 5, 4, 9, 40, 41},
};

}  // namespace

TEST_SUITE_BEGIN("pythagorean");

TEST_CASE("triple_from_params produces the expected rows") {
  PythTriple t = ratri::triple_from_params(1, 2, 1);
  CHECK(t.a == 3);
  CHECK(t.b == 4);
  CHECK(t.c == 5);
  t = ratri::triple_from_params(1, 5, 4);
  CHECK(t.a == 9);
  CHECK(t.b == 40);
  CHECK(t.c == 41);
  t = ratri::triple_from_params(2, 2, 1);
  CHECK(t.a == 6);
  CHECK(t.b == 8);
  CHECK(t.c == 10);
  CHECK(t.d == 2);
}

TEST_CASE("triple_from_params names the violated constraint") {
  auto message_of = [](auto fn) -> std::string {
    try {
      fn();
    } catch (const ratri::ValidationError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message_of([] { ratri::triple_from_params(0, 2, 1); }).find("d must be >= 1") !=
        std::string::npos);
  CHECK(message_of([] { ratri::triple_from_params(1, 2, 0); }).find("n must be >= 1") !=
        std::string::npos);
  CHECK(message_of([] { ratri::triple_from_params(1, 1, 1); }).find("m > n") !=
        std::string::npos);
  CHECK(message_of([] { ratri::triple_from_params(1, 4, 2); }).find("coprime") !=
        std::string::npos);
  CHECK(message_of([] { ratri::triple_from_params(1, 3, 1); }).find("odd") !=
        std::string::npos);
}

TEST_CASE("enumerate_primitive reproduces the m <= 5 table") {
  std::vector<PythTriple> rows = ratri::enumerate_primitive(5);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].d == kTable[i].d);
    CHECK(rows[i].m == kTable[i].m);
    CHECK(rows[i].n == kTable[i].n);
    CHECK(rows[i].a == kTable[i].a);
    CHECK(rows[i].b == kTable[i].b);
    CHECK(rows[i].c == kTable[i].c);
  }
}

TEST_CASE("enumerate_primitive edge bounds") {
  std::vector<PythTriple> rows = ratri::enumerate_primitive(2);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].a == 3);
  CHECK(rows[0].b == 4);
  CHECK(rows[0].c == 5);
  CHECK(ratri::enumerate_primitive(1).empty());
}

TEST_CASE("enumerated triples satisfy the defining identities") {
  for (const PythTriple& t : ratri::enumerate_primitive(30)) {
    CHECK(t.a * t.a + t.b * t.b == t.c * t.c);
    CHECK(t.d == 1);
    CHECK(t.m > t.n);
    CHECK(t.n >= 1);
    CHECK(boost::multiprecision::gcd(t.m, t.n) == 1);
    CHECK((t.m + t.n) % 2 == 1);
    // Twice the parametrized area equals the leg product.
    CHECK(2 * ratri::pythagorean_number(t.d, t.m, t.n) == t.a * t.b);
  }
}

TEST_CASE("pythagorean_number worked values") {
  CHECK(ratri::pythagorean_number(1, 2, 1) == 6);
  CHECK(ratri::pythagorean_number(1, 3, 2) == 30);
  CHECK(ratri::pythagorean_number(2, 2, 1) == 24);
  CHECK_THROWS_AS(ratri::pythagorean_number(1, 2, 2), ratri::ValidationError);
}

TEST_CASE("pyth_rational validates the hypotenuse") {
  ratri::PythRational r = ratri::pyth_rational(3, 4);
  CHECK(r.num() == 3);
  CHECK(r.den() == 4);
  CHECK(r.hyp() == 5);

  // Unreduced input canonicalizes first.
  ratri::PythRational reduced = ratri::pyth_rational(6, 8);
  CHECK(reduced == r);

  CHECK_THROWS_AS(ratri::pyth_rational(1, 2), ratri::NotPythagoreanError);
  try {
    ratri::pyth_rational(1, 2);
  } catch (const ratri::NotPythagoreanError& e) {
    CHECK(e.num() == 1);
    CHECK(e.den() == 2);
    CHECK(e.legs_squared() == 5);
    CHECK(std::string(e.what()).find("5") != std::string::npos);
  }

  CHECK_THROWS_AS(ratri::pyth_rational(0, 4), ratri::ValidationError);
  CHECK_THROWS_AS(ratri::pyth_rational(3, 0), ratri::ValidationError);
  CHECK_THROWS_AS(ratri::pyth_rational(-3, 4), ratri::ValidationError);

  // Integer values reduce to b = 1 and fail the hypotenuse test naturally.
  CHECK_THROWS_AS(ratri::pyth_rational(8, 4), ratri::NotPythagoreanError);
}

TEST_CASE("reciprocal swaps legs and keeps the witness") {
  ratri::PythRational r = ratri::pyth_rational(3, 4);
  ratri::PythRational rec = ratri::reciprocal(r);
  CHECK(rec.num() == 4);
  CHECK(rec.den() == 3);
  CHECK(rec.hyp() == 5);
  CHECK(ratri::reciprocal(rec) == r);

  ratri::PythRational s = ratri::pyth_rational(5, 12);
  CHECK(ratri::reciprocal(ratri::reciprocal(s)) == s);
}

TEST_CASE("exceeding_slope scans the even-m family") {
  ratri::PythRational a = ratri::exceeding_slope(Rational(0));
  CHECK(a.value() == Rational(3, 4));
  ratri::PythRational b = ratri::exceeding_slope(Rational(1));
  CHECK(b.value() == Rational(15, 8));
  ratri::PythRational c = ratri::exceeding_slope(Rational(10));
  CHECK(c.value() == Rational(483, 44));
}

TEST_CASE("exceeding_slope returns the minimal member above the bound") {
  for (long long raw : {0LL, 1LL, 7LL, 100LL, 12345LL}) {
    Rational bound(Int(raw), Int(3));
    ratri::PythRational r = ratri::exceeding_slope(bound);
    CHECK(r.value() > bound);
    CHECK(r.num() * r.num() + r.den() * r.den() == r.hyp() * r.hyp());
    // Recover m from the denominator 2m and check the previous member fails.
    Int m = r.den() / 2;
    if (m > 2) {
      Int prev = m - 2;
      Rational prev_value(prev * prev - 1, 2 * prev);
      CHECK(prev_value <= bound);
    }
  }
}

TEST_CASE("random slopes satisfy the defining invariants") {
  oracle::ParamGen gen(717);
  for (int i = 0; i < 200; ++i) {
    ratri::PythRational r = gen.next_slope();
    CHECK(boost::multiprecision::gcd(r.num(), r.den()) == 1);
    CHECK(r.num() * r.num() + r.den() * r.den() == r.hyp() * r.hyp());
    CHECK(r.den() > 1);  // never an integer
    ratri::PythRational rec = ratri::reciprocal(r);
    CHECK(rec.hyp() == r.hyp());
    CHECK(ratri::reciprocal(rec) == r);
  }
}

TEST_SUITE_END();
