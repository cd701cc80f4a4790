#pragma once

// The twist of a tiling, computed as the common value of three pairwise
// interaction sums taken along the +x, +y and +z directions.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "duplex/lattice.hpp"
#include "duplex/tiling.hpp"

namespace duplex {

// True iff some cube of d1 equals a cube of d0 shifted m steps along u for
// an integer m >= 1 (d1 sits strictly in d0's shadow along u).
bool in_shade(const Domino& d0, const Domino& d1, Direction u);

// Quarter-unit interaction: det(sign_vector(d1), sign_vector(d0), u) / 4
// when d1 is in d0's shade, else 0. Nonzero only when the two sign vectors
// and u are pairwise orthogonal.
Quarter tau(const Domino& d0, const Domino& d1, Direction u);

// Sum of tau over all ordered pairs of distinct dominoes.
Quarter pretwist(const Tiling& t, Direction u);

enum class TwistFault { PretwistMismatch, NonIntegralTwist };

std::string to_string(TwistFault f);

// Either fault indicates an implementation bug, never bad input; both are
// surfaced, never swallowed.
class TwistError : public std::logic_error {
 public:
  TwistError(TwistFault fault, const std::string& detail);
  TwistFault fault() const { return fault_; }

 private:
  TwistFault fault_;
};

// Computes the pretwists along +x, +y and +z, asserts they agree and are
// integral, and returns the common value.
std::int64_t twist(const Tiling& t);

}  // namespace duplex
