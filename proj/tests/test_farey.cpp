#include <doctest.h>

#include "twistpoly/farey.hpp"

using namespace twistpoly;

TEST_CASE("slope canonical form") {
  CHECK(Slope(2, -2).to_string() == "-1/1");
  CHECK(Slope(-3, 0) == Slope(1, 0));
  CHECK(Slope::parse("-1/1").var() == "g_-1/1");
  CHECK(Slope::parse("4").to_string() == "4/1");
  CHECK_THROWS(Slope::parse("0/0"));
  CHECK_THROWS(Slope::parse("a/b"));
}

TEST_CASE("neighbours and triangles") {
  CHECK(is_neighbor(Slope(1, 0), Slope(5, 1)));
  CHECK(is_neighbor(Slope(1, 2), Slope(1, 3)));
  CHECK_FALSE(is_neighbor(Slope(0, 1), Slope(2, 1)));
  CHECK_NOTHROW(FareyTriangle(Slope(3, 1), Slope(4, 1), Slope(1, 0)));
  CHECK_THROWS(FareyTriangle(Slope(0, 1), Slope(2, 1), Slope(1, 0)));
}

TEST_CASE("pretzel walk labels") {
  auto ls = walk_labels(Walk::parse("triangle=3/1,4/1,1/0;word=LLRLLL"));
  REQUIRE(ls.size() == 7);
  CHECK(ls[0].h == Slope(2, 1));
  CHECK(ls[1].h == Slope(1, 1));
  CHECK(ls[2].h == Slope(0, 1));
  CHECK(ls[3].h == Slope(1, 2));
  CHECK(ls[3].direction == 'R');
  CHECK(ls[4].f == Slope(1, 2));
  CHECK(ls[4].o == Slope(1, 1));
  CHECK(ls[4].p == Slope(0, 1));
  CHECK(ls[6].h == Slope(1, 5));
}

TEST_CASE("anatomy") {
  auto a = anatomy("LLRLLLL");
  CHECK(a.body == "LLR");
  CHECK(a.tail == "LLL");
  CHECK(a.tip == 'L');
  CHECK(a.tail_start_step == 4);
  CHECK(a.tip_matches_tail);
  CHECK_FALSE(anatomy("LLRRL").tip_matches_tail);
  CHECK_THROWS(anatomy("LXR"));
}

TEST_CASE("crossing counts") {
  CHECK(crossing_count(Slope(-1, 1), Slope(1, 1)) == 1);
  CHECK(crossing_count(Slope(1, 0), Slope(0, 1)) == 0);
  CHECK(crossing_count(Slope(1, 0), Slope(1, 5)) == 4);
  CHECK(crossing_count(Slope(-1, 1), Slope(1, 5)) == 5);
  CHECK(crossing_count(Slope(2, 5), Slope(3, 4)) == crossing_count(Slope(3, 4), Slope(2, 5)));
  for (auto [s, h] : {std::pair{Slope(2, 5), Slope(3, 4)}, {Slope(-7, 3), Slope(1, 6)}, {Slope(1, 0), Slope(5, 8)}})
    CHECK(crossing_count(s, h) == crossing_count_oracle(s, h, 40));
  FareyEdgeSet e(30);
  CHECK(e.crossings(Slope(-1, 1), Slope(1, 1), 30) == 1);
}
