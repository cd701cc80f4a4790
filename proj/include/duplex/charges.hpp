#pragma once

// Winding numbers, turning angles, vertex weights, cycle charges, and the
// Laurent polynomial built from a sock. All arithmetic is exact.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "duplex/lattice.hpp"
#include "duplex/sock.hpp"

namespace duplex {

// The point (x + 1/2, y + 1/2); such points never lie on lattice edges.
struct HalfPoint {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
};

// The four half-integer points diagonally around v.
std::array<HalfPoint, 4> corner_points(const Cell& v);

class CycleQueryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Signed crossing count of a rightward horizontal ray from p with the
// cycle's vertical edges; upward crossings count +1, downward -1. An edge
// is crossed when its lower endpoint height y0 satisfies y0 <= p.y < y0+1.
int winding_number(const Cycle& c, const HalfPoint& p);

// Same for an integer point; throws CycleQueryError ("PointOnCycle") when p
// lies on the cycle.
int winding_number(const Cycle& c, const Cell& p);

// +1/4 for a left turn, -1/4 for a right turn, 0 when straight; throws
// CycleQueryError ("VertexNotOnCycle") when v is not a cycle vertex.
Quarter angle(const Cycle& c, const Cell& v);

// Average winding over the four corner points of v.
Quarter metric_weight(const Cycle& c, const Cell& v);

// Average of the *distinct* winding values over the corner points of v.
// Equals the winding off the cycle and a half-integer on it.
Quarter topological_weight(const Cycle& c, const Cell& v);

// Sum of vertex_color(v) * winding over integer points not on the cycle
// (windings vanish outside the bounding box, so the sum is finite).
std::int64_t charge_interior(const Cycle& c);

// Sum of angle(c, v) * vertex_color(v) over the cycle's vertices.
Quarter charge_boundary(const Cycle& c);

// Laurent polynomial with integer coefficients; zero coefficients are never
// stored.
class LaurentPoly {
 public:
  void add(int exponent, std::int64_t coefficient);
  std::int64_t coefficient(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  std::int64_t eval_at_one() const;         // sum of coefficients
  std::int64_t derivative_at_one() const;   // sum of exponent * coefficient

  std::string str() const;  // e.g. "q^2 - 3 + 2*q^-1"

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, std::int64_t> terms_;
};

// Sum over the sock's base vertices v of vertex_color(v) * q^e(v), where
// e(v) adds up the windings of every cycle not containing v.
LaurentPoly p_polynomial(const Sock& s);

std::int64_t p_derivative_at_one(const LaurentPoly& p);

struct LemmaCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CycleLemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_pass() const;
  std::string first_failure() const;
};

// Per-cycle identities, each checked exactly over the padded bounding box:
//   3.1  interior charge equals the color-weighted topological weights
//   3.2  color-weighted metric weights sum to zero
//   3.3  topological minus metric weight is the angle on the cycle, 0 off it
//   3.4  boundary charge equals interior charge
//   turning: the angles sum to +1 or -1
//   colors:  the vertex colors along the cycle cancel
CycleLemmaReport verify_cycle_lemmas(const Cycle& c);

}  // namespace duplex
