#pragma once

// Shared test data: the standard collection of bases the exhaustive property
// runs range over, plus a few hand-built tilings with known twists.

#include <string>
#include <utility>
#include <vector>

#include "duplex/region.hpp"
#include "duplex/sock.hpp"
#include "duplex/tiling.hpp"

namespace fixtures {

// Name -> text form. Bases small enough for exhaustive enumeration, from a
// single cell up to 4x4 plus two non-rectangles.
inline const std::vector<std::pair<std::string, std::string>>& corpus() {
  static const std::vector<std::pair<std::string, std::string>> bases = {
      {"1x1", "#"},
      {"2x1", "##"},
      {"2x2", "##\n##"},
      {"2x3", "##\n##\n##"},
      {"3x3", "###\n###\n###"},
      {"2x4", "##\n##\n##\n##"},
      {"L-tromino", "#.\n##"},
      {"3x4", "###\n###\n###\n###"},
      {"4x4", "####\n####\n####\n####"},
      {"irregular-10", "###\n###\n###\n#.."},
  };
  return bases;
}

inline duplex::BaseShape base_of(const std::string& name) {
  for (const auto& [n, text] : corpus())
    if (n == name) return duplex::parse_base(text);
  throw std::logic_error("unknown fixture base " + name);
}

// Mirror through the floor plane: z -> 1 - z. Negates the twist.
inline duplex::Tiling swap_floors(const duplex::Tiling& t) {
  std::vector<duplex::Domino> ds;
  ds.reserve(t.size());
  for (const duplex::Domino& d : t.dominoes)
    ds.push_back(duplex::Domino(duplex::Cube{d.a.x, d.a.y, 1 - d.a.z},
                                duplex::Cube{d.b.x, d.b.y, 1 - d.b.z}));
  return duplex::Tiling::from_dominoes(std::move(ds));
}

// 3x3 base: a ring of horizontal dominoes windmilling around a central
// vertical domino, the floor-1 ring offset one step from the floor-0 ring.
// Twist +1.
inline duplex::Tiling ring_a() {
  using duplex::Cube;
  using duplex::Domino;
  return duplex::Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{1, 0, 0}),
      Domino(Cube{2, 0, 0}, Cube{2, 1, 0}),
      Domino(Cube{2, 2, 0}, Cube{1, 2, 0}),
      Domino(Cube{0, 2, 0}, Cube{0, 1, 0}),
      Domino(Cube{1, 0, 1}, Cube{2, 0, 1}),
      Domino(Cube{2, 1, 1}, Cube{2, 2, 1}),
      Domino(Cube{1, 2, 1}, Cube{0, 2, 1}),
      Domino(Cube{0, 1, 1}, Cube{0, 0, 1}),
      Domino(Cube{1, 1, 0}, Cube{1, 1, 1}),
  });
}

// The floor-mirrored ring. Twist -1.
inline duplex::Tiling ring_b() { return swap_floors(ring_a()); }

// 2x2 base: two x-dominoes below, two y-dominoes above. Twist 0; the sock is
// a single 4-cycle.
inline duplex::Tiling crossing_2x2() {
  using duplex::Cube;
  using duplex::Domino;
  return duplex::Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{1, 0, 0}),
      Domino(Cube{0, 1, 0}, Cube{1, 1, 0}),
      Domino(Cube{0, 0, 1}, Cube{0, 1, 1}),
      Domino(Cube{1, 0, 1}, Cube{1, 1, 1}),
  });
}

inline duplex::BaseShape base_4x2() { return duplex::parse_base("####\n####"); }

// Two tilings of the 4x2 base with the same sock (four jewels plus one
// 4-cycle): the left block is either two stacked horizontal pairs or four
// verticals; the right block is a crossing in both.
inline duplex::Tiling golden_pair_a() {
  using duplex::Cube;
  using duplex::Domino;
  return duplex::Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{1, 0, 0}),
      Domino(Cube{0, 0, 1}, Cube{1, 0, 1}),
      Domino(Cube{0, 1, 0}, Cube{1, 1, 0}),
      Domino(Cube{0, 1, 1}, Cube{1, 1, 1}),
      Domino(Cube{2, 0, 0}, Cube{3, 0, 0}),
      Domino(Cube{2, 1, 0}, Cube{3, 1, 0}),
      Domino(Cube{2, 0, 1}, Cube{2, 1, 1}),
      Domino(Cube{3, 0, 1}, Cube{3, 1, 1}),
  });
}

inline duplex::Tiling golden_pair_b() {
  using duplex::Cube;
  using duplex::Domino;
  return duplex::Tiling::from_dominoes({
      Domino(Cube{0, 0, 0}, Cube{0, 0, 1}),
      Domino(Cube{1, 0, 0}, Cube{1, 0, 1}),
      Domino(Cube{0, 1, 0}, Cube{0, 1, 1}),
      Domino(Cube{1, 1, 0}, Cube{1, 1, 1}),
      Domino(Cube{2, 0, 0}, Cube{3, 0, 0}),
      Domino(Cube{2, 1, 0}, Cube{3, 1, 0}),
      Domino(Cube{2, 0, 1}, Cube{2, 1, 1}),
      Domino(Cube{3, 0, 1}, Cube{3, 1, 1}),
  });
}

// All-vertical tiling of any base; always exists and has twist 0.
inline duplex::Tiling all_vertical(const duplex::BaseShape& base) {
  std::vector<duplex::Domino> ds;
  for (const duplex::Cell& c : base.cells())
    ds.push_back(duplex::Domino(duplex::Cube{c.x, c.y, 0},
                                duplex::Cube{c.x, c.y, 1}));
  return duplex::Tiling::from_dominoes(std::move(ds));
}

}  // namespace fixtures
