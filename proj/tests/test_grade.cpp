#include <catch2/catch_amalgamated.hpp>

#include "agfuzz/grade.hpp"

using agfuzz::grade;

TEST_CASE("grades store a canonical reduced form") {
  CHECK(grade(2, 4) == grade(1, 2));
  CHECK(grade(0, 7) == grade::zero());
  CHECK(grade(5, 5) == grade::one());
  CHECK(grade(3, 12).num() == 1);
  CHECK(grade(3, 12).den() == 4);
}

TEST_CASE("ordering and lattice operations are exact") {
  grade half(1, 2), third(1, 3), two_thirds(2, 3);
  CHECK(third < half);
  CHECK(half < two_thirds);
  CHECK(meet(half, third) == third);
  CHECK(join(half, third) == half);
  CHECK(meet(half, half) == half);
  // Equal values with different source representations compare equal.
  CHECK(grade(2, 6) == grade(1, 3));
  CHECK(!(grade(2, 6) < grade(1, 3)));
}

TEST_CASE("grade parsing is strict") {
  CHECK(grade::parse("0") == grade::zero());
  CHECK(grade::parse("1") == grade::one());
  CHECK(grade::parse("1/2") == grade(1, 2));
  CHECK(grade::parse("4/8") == grade(1, 2));

  CHECK(!grade::try_parse(""));
  CHECK(!grade::try_parse("2"));       // above 1
  CHECK(!grade::try_parse("3/2"));     // above 1
  CHECK(!grade::try_parse("-1/2"));
  CHECK(!grade::try_parse("1/0"));
  CHECK(!grade::try_parse("0.5"));
  CHECK(!grade::try_parse("1/2 "));    // trailing garbage
  CHECK(!grade::try_parse("a/b"));
  CHECK_THROWS_AS(grade::parse("7/3"), agfuzz::error);
}

TEST_CASE("rendering round-trips through parse") {
  for (const char* s : {"0", "1", "1/2", "3/4", "5/7"}) {
    grade g = grade::parse(s);
    CHECK(g.str() == s);
    CHECK(grade::parse(g.str()) == g);
  }
  CHECK(grade(2, 4).str() == "1/2");
}
