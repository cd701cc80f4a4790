#include "duplex/lattice.hpp"

#include <numeric>
#include <ostream>

namespace duplex {

std::string to_string(Direction d) {
  static const char* names[6] = {"+x", "-x", "+y", "-y", "+z", "-z"};
  return names[static_cast<int>(d)];
}

std::string to_string(Axis a) {
  static const char* names[3] = {"x", "y", "z"};
  return names[static_cast<int>(a)];
}

std::string Quarter::str() const {
  if (num_ == 0) return "0";
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, std::int64_t{4});
  std::int64_t den = 4 / g;
  if (den == 1) return std::to_string(num_ / 4);
  return std::to_string(num_ / g) + "/" + std::to_string(den);
}

std::ostream& operator<<(std::ostream& os, const Quarter& q) {
  return os << q.str();
}

std::ostream& operator<<(std::ostream& os, const Cube& c) {
  return os << "(" << c.x << "," << c.y << "," << c.z << ")";
}

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << "(" << c.x << "," << c.y << ")";
}

}  // namespace duplex
