#pragma once

// Deterministic SVG and ASCII views of tilings and socks. Rendering the same
// value twice always yields identical bytes. The y axis is drawn downward so
// pictures line up with the text form of the base.

#include <string>

#include "duplex/region.hpp"
#include "duplex/sock.hpp"
#include "duplex/tiling.hpp"

namespace duplex {

std::string render_tiling_svg(const BaseShape& base, const Tiling& t);
std::string render_tiling_ascii(const BaseShape& base, const Tiling& t);

// annotate adds the turning angle at cycle vertices and the winding exponent
// at jewels.
std::string render_sock_svg(const BaseShape& base, const Sock& s,
                            bool annotate = false);
std::string render_sock_ascii(const BaseShape& base, const Sock& s);

}  // namespace duplex
