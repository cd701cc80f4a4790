#include <doctest.h>

#include <set>

#include "duplex/lattice.hpp"

using namespace duplex;

TEST_CASE("direction helpers are consistent") {
  for (Direction d : kAllDirections) {
    CHECK(axis_of(opposite(d)) == axis_of(d));
    CHECK(is_positive(opposite(d)) == !is_positive(d));
    CHECK(direction_along(axis_of(d), is_positive(d)) == d);
    auto v = components(d);
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) {
      if (v[i] != 0) {
        ++nonzero;
        CHECK(i == static_cast<int>(axis_of(d)));
        CHECK(v[i] == (is_positive(d) ? 1 : -1));
      }
    }
    CHECK(nonzero == 1);
  }
  CHECK(to_string(Direction::PosX) == "+x");
  CHECK(to_string(Direction::NegZ) == "-z");
}

TEST_CASE("cube shifts move one unit along the direction") {
  Cube c{2, -1, 0};
  CHECK(c.shifted(Direction::PosY) == Cube{2, 0, 0});
  CHECK(c.shifted(Direction::NegX, 3) == Cube{-1, -1, 0});
  for (Direction d : kAllDirections)
    CHECK(c.shifted(d).shifted(opposite(d)) == c);
}

TEST_CASE("det3 is the signed permutation determinant") {
  CHECK(det3(Direction::PosX, Direction::PosY, Direction::PosZ) == 1);
  CHECK(det3(Direction::PosY, Direction::PosX, Direction::PosZ) == -1);
  CHECK(det3(Direction::PosY, Direction::PosZ, Direction::PosX) == 1);
  CHECK(det3(Direction::NegX, Direction::PosY, Direction::PosZ) == -1);
  for (Direction a : kAllDirections)
    for (Direction b : kAllDirections)
      for (Direction c : kAllDirections) {
        int d = det3(a, b, c);
        CHECK((d == -1 || d == 0 || d == 1));
        // Antisymmetry under swapping any two rows.
        CHECK(det3(b, a, c) == -d);
        CHECK(det3(a, c, b) == -d);
        // Zero iff two rows share an axis.
        bool degenerate = axis_of(a) == axis_of(b) || axis_of(a) == axis_of(c) ||
                          axis_of(b) == axis_of(c);
        CHECK((d == 0) == degenerate);
        // Negating one row negates the determinant.
        CHECK(det3(opposite(a), b, c) == -d);
      }
}

TEST_CASE("colorings alternate along every axis") {
  CHECK(cube_color(Cube{0, 0, 0}) == 1);
  CHECK(cube_color(Cube{1, 0, 0}) == -1);
  CHECK(cube_color(Cube{1, 1, 0}) == 1);
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = 0; z <= 1; ++z) {
        Cube c{x, y, z};
        for (Direction d : kAllDirections)
          CHECK(cube_color(c.shifted(d)) == -cube_color(c));
      }
  // The planar coloring is offset: (0,0) is white, (1,0) black.
  CHECK(vertex_color(Cell{0, 0}) == -1);
  CHECK(vertex_color(Cell{1, 0}) == 1);
  CHECK(vertex_color(Cell{0, 1}) == 1);
  CHECK(vertex_color(Cell{1, 1}) == -1);
}

TEST_CASE("quarters are exact and printable") {
  Quarter q = Quarter::from_quarters(3);
  CHECK(q.str() == "3/4");
  CHECK(!q.is_integral());
  CHECK_THROWS_AS(q.whole(), std::logic_error);

  Quarter two = Quarter::from_whole(2);
  CHECK(two.quarters() == 8);
  CHECK(two.is_integral());
  CHECK(two.whole() == 2);
  CHECK(two.str() == "2");

  CHECK(Quarter::from_quarters(2).str() == "1/2");
  CHECK(Quarter::from_quarters(-3).str() == "-3/4");
  CHECK(Quarter().str() == "0");

  CHECK(Quarter::from_quarters(1) + Quarter::from_quarters(3) ==
        Quarter::from_whole(1));
  CHECK(Quarter::from_whole(1) - Quarter::from_quarters(1) ==
        Quarter::from_quarters(3));
  CHECK(-Quarter::from_quarters(5) == Quarter::from_quarters(-5));
  CHECK(3 * Quarter::from_quarters(2) == Quarter::from_quarters(6));
  CHECK(Quarter::from_quarters(2) * -2 == Quarter::from_whole(-1));
  CHECK(Quarter::from_quarters(1) < Quarter::from_quarters(2));
}

TEST_CASE("cube and cell ordering is lexicographic") {
  CHECK(Cube{0, 0, 0} < Cube{0, 0, 1});
  CHECK(Cube{0, 0, 1} < Cube{0, 1, 0});
  CHECK(Cube{0, 9, 9} < Cube{1, 0, 0});
  CHECK(Cell{0, 5} < Cell{1, 0});
  std::set<Cube> s{{1, 0, 0}, {0, 0, 0}, {0, 1, 0}};
  CHECK(*s.begin() == Cube{0, 0, 0});
}
