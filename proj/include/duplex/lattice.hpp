#pragma once

// Integer-lattice primitives shared by everything else: unit cubes and
// planar cells, the six signed axis directions, the two checkerboard
// colorings, and an exact quarter-integer scalar.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace duplex {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

enum class Direction : int { PosX = 0, NegX, PosY, NegY, PosZ, NegZ };

inline constexpr std::array<Direction, 6> kAllDirections = {
    Direction::PosX, Direction::NegX, Direction::PosY,
    Direction::NegY, Direction::PosZ, Direction::NegZ};

constexpr Axis axis_of(Direction d) {
  return static_cast<Axis>(static_cast<int>(d) / 2);
}

constexpr bool is_positive(Direction d) {
  return static_cast<int>(d) % 2 == 0;
}

constexpr Direction opposite(Direction d) {
  int v = static_cast<int>(d);
  return static_cast<Direction>(v ^ 1);
}

constexpr Direction direction_along(Axis a, bool positive) {
  return static_cast<Direction>(static_cast<int>(a) * 2 + (positive ? 0 : 1));
}

constexpr std::array<int, 3> components(Direction d) {
  std::array<int, 3> v{0, 0, 0};
  v[static_cast<int>(axis_of(d))] = is_positive(d) ? 1 : -1;
  return v;
}

std::string to_string(Direction d);
std::string to_string(Axis a);

struct Cube {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr auto operator<=>(const Cube&, const Cube&) = default;

  constexpr Cube shifted(Direction d, int steps = 1) const {
    auto v = components(d);
    return Cube{x + steps * v[0], y + steps * v[1], z + steps * v[2]};
  }
};

struct Cell {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Cube coloring: +1 (black) iff x+y+z is even.
constexpr int cube_color(const Cube& c) {
  return ((c.x + c.y + c.z) & 1) == 0 ? +1 : -1;
}

// Planar vertex coloring uses the opposite parity: +1 (black) iff x+y is odd.
constexpr int vertex_color(const Cell& v) {
  return ((v.x + v.y) & 1) == 1 ? +1 : -1;
}

// Determinant of the 3x3 matrix whose rows are the unit vectors of a, b, c.
// Always -1, 0 or +1; fully antisymmetric under row swaps.
constexpr int det3(Direction a, Direction b, Direction c) {
  auto r0 = components(a);
  auto r1 = components(b);
  auto r2 = components(c);
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
         r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

// Exact scalar of the form n/4. The denominator is fixed, so addition and
// integer scaling never lose precision; there is no floating point anywhere
// in the arithmetic that feeds the invariant checks.
class Quarter {
 public:
  constexpr Quarter() = default;

  static constexpr Quarter from_quarters(std::int64_t n) { return Quarter(n); }
  static constexpr Quarter from_whole(std::int64_t n) { return Quarter(4 * n); }

  constexpr std::int64_t quarters() const { return num_; }
  constexpr bool is_integral() const { return num_ % 4 == 0; }

  // Value as a plain integer; only meaningful when is_integral().
  std::int64_t whole() const {
    if (!is_integral())
      throw std::logic_error("Quarter::whole on non-integral value " + str());
    return num_ / 4;
  }

  constexpr Quarter operator-() const { return Quarter(-num_); }
  constexpr Quarter& operator+=(Quarter o) {
    num_ += o.num_;
    return *this;
  }
  constexpr Quarter& operator-=(Quarter o) {
    num_ -= o.num_;
    return *this;
  }
  friend constexpr Quarter operator+(Quarter a, Quarter b) {
    return Quarter(a.num_ + b.num_);
  }
  friend constexpr Quarter operator-(Quarter a, Quarter b) {
    return Quarter(a.num_ - b.num_);
  }
  friend constexpr Quarter operator*(std::int64_t k, Quarter q) {
    return Quarter(k * q.num_);
  }
  friend constexpr Quarter operator*(Quarter q, std::int64_t k) {
    return Quarter(k * q.num_);
  }
  friend constexpr auto operator<=>(Quarter, Quarter) = default;

  // Reduced textual form: "2", "1/2", "-3/4", "0".
  std::string str() const;

 private:
  explicit constexpr Quarter(std::int64_t n) : num_(n) {}
  std::int64_t num_ = 0;
};

std::ostream& operator<<(std::ostream&, const Quarter&);
std::ostream& operator<<(std::ostream&, const Cube&);
std::ostream& operator<<(std::ostream&, const Cell&);

}  // namespace duplex
