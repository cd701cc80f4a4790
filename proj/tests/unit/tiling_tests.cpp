#include <doctest.h>

#include <algorithm>
#include <set>

#include "duplex/tiling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace duplex;

TEST_CASE("dominoes normalize their cube order and reject degenerate pairs") {
  Domino d(Cube{1, 0, 0}, Cube{0, 0, 0});
  CHECK(d.a == Cube{0, 0, 0});
  CHECK(d.b == Cube{1, 0, 0});
  CHECK(d.valid());
  CHECK(d.axis() == Axis::X);
  CHECK(!d.vertical());
  CHECK(d.floor() == 0);
  CHECK_THROWS_AS(Domino(Cube{0, 0, 0}, Cube{0, 0, 0}), std::invalid_argument);
  CHECK(!Domino(Cube{0, 0, 0}, Cube{2, 0, 0}).valid());
  CHECK(!Domino(Cube{0, 0, 0}, Cube{1, 1, 0}).valid());
  CHECK(Domino(Cube{0, 0, 0}, Cube{0, 0, 1}).vertical());
}

TEST_CASE("the sign vector points from the white cube to the black cube") {
  CHECK(sign_vector(Domino(Cube{0, 0, 0}, Cube{1, 0, 0})) == Direction::NegX);
  CHECK(sign_vector(Domino(Cube{0, 0, 0}, Cube{0, 0, 1})) == Direction::NegZ);
  CHECK(sign_vector(Domino(Cube{0, 0, 1}, Cube{0, 1, 1})) == Direction::PosY);
  // Translating a domino by one step flips its sign vector.
  Domino d(Cube{0, 0, 0}, Cube{1, 0, 0});
  Domino shifted(Cube{1, 0, 0}, Cube{2, 0, 0});
  CHECK(sign_vector(shifted) == opposite(sign_vector(d)));
}

TEST_CASE("tiling validation reports the first defect") {
  DuplexRegion r = build_duplex(parse_base("##"));
  Tiling good = Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{0, 0, 1}),
      Domino(Cube{1, 0, 0}, Cube{1, 0, 1}),
  });
  CHECK(validate_tiling(r, good).ok);

  Tiling outside = Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{0, 0, 1}),
      Domino(Cube{2, 0, 0}, Cube{2, 0, 1}),
  });
  CHECK(validate_tiling(r, outside).error == TilingError::CubeOutsideRegion);

  Tiling overlapping = Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{1, 0, 0}),
      Domino(Cube{0, 0, 0}, Cube{0, 0, 1}),
      Domino(Cube{1, 0, 1}, Cube{0, 0, 1}),
  });
  CHECK(validate_tiling(r, overlapping).error == TilingError::OverlappingDominoes);

  Tiling uncovered = Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{0, 0, 1}),
  });
  CHECK(validate_tiling(r, uncovered).error == TilingError::UncoveredCube);

  Tiling malformed = Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{1, 0, 1}),
      Domino(Cube{0, 0, 1}, Cube{1, 0, 0}),
  });
  CHECK(validate_tiling(r, malformed).error == TilingError::MalformedDomino);
}

TEST_CASE("enumeration counts match the matching oracle on small bases") {
  for (const char* name : {"1x1", "2x1", "2x2", "L-tromino", "2x3", "2x4"}) {
    DuplexRegion r = build_duplex(fixtures::base_of(name));
    CAPTURE(name);
    CHECK(count_tilings(r) == oracles::count_perfect_matchings(r));
  }
  CHECK(count_tilings(build_duplex(fixtures::base_of("1x1"))) == 1);
  CHECK(count_tilings(build_duplex(fixtures::base_of("2x1"))) == 2);
  CHECK(count_tilings(build_duplex(fixtures::base_of("2x2"))) == 9);
}

TEST_CASE("enumeration is deterministic, exhaustive and stoppable") {
  DuplexRegion r = build_duplex(fixtures::base_of("2x1"));
  std::vector<Tiling> ts = enumerate_tilings(r);
  REQUIRE(ts.size() == 2);
  // Covering (0,0,0) tries the +x partner before the +z partner.
  CHECK(ts[0] == Tiling::from_dominoes({
                     Domino(Cube{0, 0, 0}, Cube{1, 0, 0}),
                     Domino(Cube{0, 0, 1}, Cube{1, 0, 1}),
                 }));
  CHECK(ts[1] == Tiling::from_dominoes({
                     Domino(Cube{0, 0, 0}, Cube{0, 0, 1}),
                     Domino(Cube{1, 0, 0}, Cube{1, 0, 1}),
                 }));
  for (const Tiling& t : ts) CHECK(validate_tiling(r, t).ok);

  // Every enumerated tiling is distinct and valid on a bigger base too.
  DuplexRegion r2 = build_duplex(fixtures::base_of("2x3"));
  std::vector<Tiling> all = enumerate_tilings(r2);
  std::set<Tiling> distinct(all.begin(), all.end());
  CHECK(distinct.size() == all.size());
  for (const Tiling& t : all) CHECK(validate_tiling(r2, t).ok);

  int seen = 0;
  for_each_tiling(r2, [&](const Tiling&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("flips exchange the two tilings of a 2x2x1 box") {
  Tiling stacked = Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{1, 0, 0}),
      Domino(Cube{0, 0, 1}, Cube{1, 0, 1}),
  });
  Tiling upright = Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{0, 0, 1}),
      Domino(Cube{1, 0, 0}, Cube{1, 0, 1}),
  });
  std::vector<Flip> fs = find_flips(stacked);
  REQUIRE(fs.size() == 1);
  CHECK(apply_flip(stacked, fs[0]) == upright);
  CHECK(apply_flip(upright, fs[0].reversed()) == stacked);
  CHECK_THROWS_AS(apply_flip(upright, fs[0]), FlipError);

  // All-vertical 2x2: one flip per adjacent cell pair.
  Tiling verts = fixtures::all_vertical(fixtures::base_of("2x2"));
  CHECK(find_flips(verts).size() == 4);

  // Flip results of enumerated tilings are themselves valid tilings.
  DuplexRegion r = build_duplex(fixtures::base_of("2x2"));
  for (const Tiling& t : enumerate_tilings(r))
    for (const Flip& f : find_flips(t)) {
      Tiling u = apply_flip(t, f);
      CHECK(validate_tiling(r, u).ok);
      CHECK(oracles::one_flip_apart(t, u));
      CHECK(apply_flip(u, f.reversed()) == t);
    }
}

TEST_CASE("flip components agree with the pairwise oracle") {
  for (const char* name : {"2x1", "2x2", "2x3", "L-tromino"}) {
    CAPTURE(name);
    DuplexRegion r = build_duplex(fixtures::base_of(name));
    std::vector<Tiling> ts = enumerate_tilings(r);
    FlipComponents fc = flip_components(ts);
    std::vector<std::size_t> oracle = oracles::flip_classes(ts);
    REQUIRE(fc.component_of.size() == ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = 0; j < ts.size(); ++j)
        CHECK((fc.component_of[i] == fc.component_of[j]) ==
              (oracle[i] == oracle[j]));
    // Components partition the index set.
    std::size_t total = 0;
    for (const auto& comp : fc.components) total += comp.size();
    CHECK(total == ts.size());
  }
}
