#pragma once

// JSON forms of tilings, socks and Laurent polynomials. All emitters are
// canonical (sorted content, compact single-line output), so equal values
// always serialize to equal bytes.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duplex/charges.hpp"
#include "duplex/region.hpp"
#include "duplex/sock.hpp"
#include "duplex/tiling.hpp"

namespace duplex {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"base": ["##", ...], "dominoes": [[[x,y,z],[x,y,z]], ...]}
std::string tiling_to_json(const BaseShape& base, const Tiling& t);

// Parsed but not yet validated tiling document.
struct RawTiling {
  std::string base_text;
  std::vector<std::pair<Cube, Cube>> cube_pairs;
};

RawTiling raw_tiling_from_json(const std::string& text);

// Builds the tiling from a raw document; degenerate cube pairs are rejected
// here, everything else is left to validate_tiling.
Tiling tiling_from_raw(const RawTiling& raw);

// {"cycles": [{"floors": [...], "vertices": [[x,y], ...]}, ...],
//  "jewels": [[x,y], ...]}
std::string sock_to_json(const Sock& s);
Sock sock_from_json(const std::string& text);

// Sorted [exponent, coefficient] pairs.
std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

}  // namespace duplex
