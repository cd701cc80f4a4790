#include "duplex/twist.hpp"

namespace duplex {

bool in_shade(const Domino& d0, const Domino& d1, Direction u) {
  const auto v = components(u);
  for (const Cube& c0 : {d0.a, d0.b}) {
    for (const Cube& c1 : {d1.a, d1.b}) {
      int dx = c1.x - c0.x, dy = c1.y - c0.y, dz = c1.z - c0.z;
      int m = dx * v[0] + dy * v[1] + dz * v[2];
      if (m >= 1 && dx == m * v[0] && dy == m * v[1] && dz == m * v[2])
        return true;
    }
  }
  return false;
}

Quarter tau(const Domino& d0, const Domino& d1, Direction u) {
  if (!in_shade(d0, d1, u)) return Quarter{};
  return Quarter::from_quarters(det3(sign_vector(d1), sign_vector(d0), u));
}

Quarter pretwist(const Tiling& t, Direction u) {
  Quarter sum;
  const auto& ds = t.dominoes;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (i != j) sum += tau(ds[i], ds[j], u);
  return sum;
}

std::string to_string(TwistFault f) {
  switch (f) {
    case TwistFault::PretwistMismatch: return "PretwistMismatch";
    case TwistFault::NonIntegralTwist: return "NonIntegralTwist";
  }
  return "UnknownTwistFault";
}

TwistError::TwistError(TwistFault fault, const std::string& detail)
    : std::logic_error(to_string(fault) + ": " + detail), fault_(fault) {}

std::int64_t twist(const Tiling& t) {
  Quarter along_x = pretwist(t, Direction::PosX);
  Quarter along_y = pretwist(t, Direction::PosY);
  Quarter along_z = pretwist(t, Direction::PosZ);
  if (!(along_x == along_y && along_y == along_z))
    throw TwistError(TwistFault::PretwistMismatch,
                     "+x gives " + along_x.str() + ", +y gives " +
                         along_y.str() + ", +z gives " + along_z.str());
  if (!along_x.is_integral())
    throw TwistError(TwistFault::NonIntegralTwist,
                     "common pretwist " + along_x.str());
  return along_x.whole();
}

}  // namespace duplex
