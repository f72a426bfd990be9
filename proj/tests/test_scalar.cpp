#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace axial;
using testutil::S;

TEST_CASE("normalization of parsed expressions") {
  CHECK(S("2/4") == Scalar(1, 2));
  CHECK(S("007") == Scalar(7));  // leading zeros are plain base-10
  CHECK(to_string(S("2/4")) == "1/2");
  CHECK(S("sqrt(9/4)") == Scalar(3, 2));
  CHECK(S("sqrt(8)") == Scalar(2) * sqrt(Scalar(2)));
  CHECK(to_string(S("sqrt(8)")) == "2*sqrt(2)");
  CHECK(S("1/3 + 1/6 - 1/2").is_zero());
  CHECK(S("sqrt(2)*sqrt(2) - 2").is_zero());
  CHECK_FALSE(S("sqrt(2) - 1").is_zero());
  CHECK(S("(1+sqrt(2))*(1-sqrt(2))") == Scalar(-1));
  CHECK(S("sqrt(2)*sqrt(3)") == sqrt(Scalar(6)));
  CHECK(S("sqrt(6)/sqrt(2)") == sqrt(Scalar(3)));
}

TEST_CASE("sqrt on rationals") {
  CHECK(sqrt(Scalar(0)) == Scalar(0));
  CHECK(sqrt(Scalar(1, 4)) == Scalar(1, 2));
  Scalar r5 = sqrt(Scalar(5));
  CHECK(r5 * r5 == Scalar(5));
  FieldTower tower = FieldTower::spanning({r5});
  REQUIRE(tower.radicands().size() == 1);
  CHECK(tower.radicands()[0] == 5);
  CHECK_THROWS_AS(sqrt(sqrt(Scalar(2))), NestedRadical);
  CHECK_THROWS_AS(sqrt(Scalar(-1)), NegativeRadicand);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  // rational radicand p/q maps to sqrt(p q)/q
  CHECK(sqrt(Scalar(1, 2)) == sqrt(Scalar(2)) / Scalar(2));
}

TEST_CASE("field axioms hold exactly on random elements") {
  testutil::Rng rng(2024);
  auto random_scalar = [&] {
    Scalar x(rng.rational());
    x += Scalar(rng.rational()) * sqrt(Scalar(2));
    x += Scalar(rng.rational()) * sqrt(Scalar(3));
    if (rng.integer(0, 1)) x += Scalar(rng.rational()) * sqrt(Scalar(30));
    return x;
  };
  for (int i = 0; i < 60; ++i) {
    Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Scalar(1));
      CHECK((y / x) * x == y);
    }
    CHECK(x - x == Scalar(0));
  }
}

TEST_CASE("canonical form is unique and round-trips through text") {
  testutil::Rng rng(99);
  for (int i = 0; i < 80; ++i) {
    Scalar x(rng.rational());
    for (long d : {2L, 5L, 7L, 10L})
      if (rng.integer(0, 1)) x += Scalar(rng.rational()) * sqrt(Scalar(d));
    Scalar back = parse_scalar(to_string(x));
    CHECK(back == x);
    // equality of stored data iff the difference normalizes to zero
    Scalar y = x + Scalar(rng.rational());
    CHECK((x == y) == (x - y).is_zero());
  }
}

TEST_CASE("division rationalizes multiquadratic denominators") {
  Scalar x = Scalar(1) + sqrt(Scalar(2)) + sqrt(Scalar(3)) - Scalar(2) * sqrt(Scalar(6));
  Scalar inv = x.inverse();
  CHECK(x * inv == Scalar(1));
  Scalar y = (Scalar(3, 7) - sqrt(Scalar(5))) / (Scalar(2) + sqrt(Scalar(45)));
  CHECK(y * (Scalar(2) + Scalar(3) * sqrt(Scalar(5))) == Scalar(3, 7) - sqrt(Scalar(5)));
}

TEST_CASE("tower spans and membership") {
  Scalar x = sqrt(Scalar(2)) + sqrt(Scalar(6));
  FieldTower t = FieldTower::spanning({x});
  // sqrt(6) = sqrt(2) sqrt(3), so the coprime generators are {2, 3}
  REQUIRE(t.radicands().size() == 2);
  CHECK(t.radicands()[0] == 2);
  CHECK(t.radicands()[1] == 3);
  CHECK(t.contains(sqrt(Scalar(3)) * Scalar(5)));
  CHECK_FALSE(t.contains(sqrt(Scalar(5))));
}

TEST_CASE("sqrt squares back for random admissible arguments") {
  testutil::Rng rng(314);
  for (int i = 0; i < 50; ++i) {
    Rational q = rng.rational(40, 20);
    if (sgn(q) < 0) q = -q;
    Scalar x(q);
    Scalar r = sqrt(x);
    CHECK(r * r == x);
  }
}

TEST_CASE("parser never crashes on junk, it throws") {
  testutil::Rng rng(2718);
  const std::string alphabet = "0123456789+-*/()sqrt ";
  for (int trial = 0; trial < 300; ++trial) {
    std::string junk;
    int len = static_cast<int>(rng.integer(1, 24));
    for (int i = 0; i < len; ++i)
      junk += alphabet[static_cast<std::size_t>(rng.integer(0, alphabet.size() - 1))];
    try {
      Scalar x = parse_scalar(junk);
      CHECK(parse_scalar(to_string(x)) == x);  // valid parses round-trip
    } catch (const FieldError&) {
      // fine: malformed or inadmissible input
    }
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_scalar("1/"), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("sqrt(2"), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("2 + * 3"), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar(""), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("1/(2-2)"), DivisionByZero);
  CHECK_THROWS_AS(parse_scalar("sqrt(sqrt(2))"), NestedRadical);
}
