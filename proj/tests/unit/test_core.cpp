#include "dpq/core.hpp"

#include <doctest.h>

using namespace dpq;

TEST_CASE("rational text and json round trip") {
  CHECK(to_string(Rational(-9, 5)) == "-9/5");
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(to_json(Rational(4)) == Json(4));
  CHECK(to_json(Rational(2, 15)) == Json("2/15"));
  CHECK(rational_from_json(Json("25/3")) == Rational(25, 3));
  CHECK(rational_from_json(Json(-7)) == Rational(-7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("integer linear algebra") {
  const IntMat a{{1, 2}, {3, 4}};
  CHECK(mul(a, identity(2)) == a);
  CHECK(mul(a, IntVec{1, 1}) == IntVec{3, 7});
  CHECK(transpose(a) == IntMat{{1, 3}, {2, 4}});
  CHECK(rank(to_rational(IntMat{{1, 2}, {2, 4}})) == 1);
  auto inv = inverse(to_rational(a));
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rational(-2));
  CHECK((*inv)[1][0] == Rational(3, 2));
  CHECK_FALSE(inverse(to_rational(IntMat{{1, 2}, {2, 4}})));
  const IntMat k = integer_kernel(IntMat{{1, 1, 1}}, 3);
  CHECK(k.size() == 2);
  for (const auto& row : k) CHECK(row[0] + row[1] + row[2] == 0);
}

TEST_CASE("number helpers") {
  CHECK(gcd_ll(-12, 18) == 6);
  CHECK(mod_inverse(2, 5) == 3);
  CHECK_THROWS_AS(mod_inverse(2, 4), Error);
  CHECK(squarefree_part(12) == 3);
  CHECK(squarefree_part(-8) == -2);
}

TEST_CASE("data loading reports structured errors") {
  try {
    load_json("no/such/file.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "missing_data");
  }
  CHECK(load_json("examples.json").contains("examples"));
}
