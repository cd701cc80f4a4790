#pragma once

// Dominoes over a duplex region: validation, exhaustive enumeration in a
// fixed deterministic order, and local 2x2x1 flip moves.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "duplex/lattice.hpp"
#include "duplex/region.hpp"

namespace duplex {

// Unordered pair of distinct cubes, stored with a < b. A domino is usable
// only when the cubes are face-adjacent; valid() reports that, and the
// geometric accessors require it.
struct Domino {
  Cube a;
  Cube b;

  Domino(Cube c0, Cube c1);

  bool valid() const;
  Axis axis() const;
  bool vertical() const { return axis() == Axis::Z; }
  int floor() const;  // horizontal dominoes only: common z of both cubes
  Cell cell_a() const { return Cell{a.x, a.y}; }
  Cell cell_b() const { return Cell{b.x, b.y}; }

  friend auto operator<=>(const Domino&, const Domino&) = default;
};

std::ostream& operator<<(std::ostream&, const Domino&);

// Unit vector from the white cube's center to the black cube's center.
Direction sign_vector(const Domino& d);

struct Tiling {
  std::vector<Domino> dominoes;  // sorted

  static Tiling from_dominoes(std::vector<Domino> ds);
  std::size_t size() const { return dominoes.size(); }
  bool contains(const Domino& d) const;

  friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

enum class TilingError {
  CubeOutsideRegion,
  OverlappingDominoes,
  UncoveredCube,
  MalformedDomino,
};

std::string to_string(TilingError e);

struct TilingCheck {
  bool ok = true;
  std::optional<TilingError> error;
  std::string detail;

  static TilingCheck pass() { return TilingCheck{}; }
  static TilingCheck fail(TilingError e, std::string detail);
};

// A tiling is accepted iff it partitions the region's cubes into
// face-adjacent dominoes.
TilingCheck validate_tiling(const DuplexRegion& region, const Tiling& t);

// Visits every tiling exactly once, in the deterministic order given by
// always covering the lexicographically first uncovered cube and trying its
// partner in +x, +y, +z order. The visitor returns false to stop early.
void for_each_tiling(const DuplexRegion& region,
                     const std::function<bool(const Tiling&)>& visit);

std::vector<Tiling> enumerate_tilings(const DuplexRegion& region);
std::uint64_t count_tilings(const DuplexRegion& region);

// A flip removes two parallel dominoes filling a 2x2x1 box and places the
// two perpendicular dominoes over the same four cubes.
struct Flip {
  std::array<Domino, 2> removed;
  std::array<Domino, 2> placed;

  Flip reversed() const { return Flip{placed, removed}; }
  friend auto operator<=>(const Flip&, const Flip&) = default;
};

class FlipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All flips available in t, ordered by the removed pair.
std::vector<Flip> find_flips(const Tiling& t);

// Throws FlipError ("FlipNotApplicable") if f's removed pair is not in t.
Tiling apply_flip(const Tiling& t, const Flip& f);

// Connected components of the flip graph over the enumeration order of the
// region's tilings. Components are listed by smallest member index.
struct FlipComponents {
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;  // tiling index -> component id
};

FlipComponents flip_components(const std::vector<Tiling>& tilings);
FlipComponents flip_components(const DuplexRegion& region);

}  // namespace duplex
