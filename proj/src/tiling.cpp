#include "duplex/tiling.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

namespace duplex {

namespace {

std::string cube_str(const Cube& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," +
         std::to_string(c.z) + ")";
}

std::string domino_str(const Domino& d) {
  return "{" + cube_str(d.a) + "," + cube_str(d.b) + "}";
}

}  // namespace

Domino::Domino(Cube c0, Cube c1) {
  if (c0 == c1)
    throw std::invalid_argument("domino with two equal cubes " + cube_str(c0));
  if (c1 < c0) std::swap(c0, c1);
  a = c0;
  b = c1;
}

bool Domino::valid() const {
  int dx = std::abs(a.x - b.x);
  int dy = std::abs(a.y - b.y);
  int dz = std::abs(a.z - b.z);
  return dx + dy + dz == 1;
}

Axis Domino::axis() const {
  assert(valid());
  if (a.x != b.x) return Axis::X;
  if (a.y != b.y) return Axis::Y;
  return Axis::Z;
}

int Domino::floor() const {
  assert(valid() && !vertical());
  return a.z;
}

std::ostream& operator<<(std::ostream& os, const Domino& d) {
  return os << domino_str(d);
}

Direction sign_vector(const Domino& d) {
  assert(d.valid());
  const bool a_black = cube_color(d.a) > 0;
  const Cube& black = a_black ? d.a : d.b;
  const Cube& white = a_black ? d.b : d.a;
  Axis ax = d.axis();
  int delta = ax == Axis::X ? black.x - white.x
            : ax == Axis::Y ? black.y - white.y
                            : black.z - white.z;
  return direction_along(ax, delta > 0);
}

Tiling Tiling::from_dominoes(std::vector<Domino> ds) {
  std::sort(ds.begin(), ds.end());
  return Tiling{std::move(ds)};
}

bool Tiling::contains(const Domino& d) const {
  return std::binary_search(dominoes.begin(), dominoes.end(), d);
}

std::string to_string(TilingError e) {
  switch (e) {
    case TilingError::CubeOutsideRegion: return "CubeOutsideRegion";
    case TilingError::OverlappingDominoes: return "OverlappingDominoes";
    case TilingError::UncoveredCube: return "UncoveredCube";
    case TilingError::MalformedDomino: return "MalformedDomino";
  }
  return "UnknownTilingError";
}

TilingCheck TilingCheck::fail(TilingError e, std::string detail) {
  return TilingCheck{false, e, std::move(detail)};
}

TilingCheck validate_tiling(const DuplexRegion& region, const Tiling& t) {
  std::vector<Cube> covered;
  covered.reserve(2 * t.size());
  for (const Domino& d : t.dominoes) {
    if (!d.valid())
      return TilingCheck::fail(TilingError::MalformedDomino,
                               "cubes not face-adjacent in " + domino_str(d));
    for (const Cube& c : {d.a, d.b}) {
      if (!region.contains(c))
        return TilingCheck::fail(TilingError::CubeOutsideRegion,
                                 cube_str(c) + " lies outside the region");
      covered.push_back(c);
    }
  }
  std::sort(covered.begin(), covered.end());
  for (std::size_t i = 1; i < covered.size(); ++i)
    if (covered[i] == covered[i - 1])
      return TilingCheck::fail(TilingError::OverlappingDominoes,
                               cube_str(covered[i]) + " covered twice");
  if (covered.size() != region.cubes().size()) {
    // covered is a strict sorted subset of the region's cubes here
    const auto& all = region.cubes();
    std::size_t i = 0;
    for (const Cube& c : all) {
      if (i < covered.size() && covered[i] == c) {
        ++i;
        continue;
      }
      return TilingCheck::fail(TilingError::UncoveredCube,
                               cube_str(c) + " is not covered");
    }
  }
  return TilingCheck::pass();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Enumerator {
  const std::vector<Cube>& cubes;  // sorted
  const std::function<bool(const Tiling&)>& visit;
  std::vector<char> covered;
  std::vector<Domino> chosen;
  bool stopped = false;

  explicit Enumerator(const DuplexRegion& region,
                      const std::function<bool(const Tiling&)>& v)
      : cubes(region.cubes()), visit(v), covered(cubes.size(), 0) {
    chosen.reserve(cubes.size() / 2);
  }

  int index_of(const Cube& c) const {
    auto it = std::lower_bound(cubes.begin(), cubes.end(), c);
    if (it == cubes.end() || *it != c) return -1;
    return static_cast<int>(it - cubes.begin());
  }

  void run(std::size_t from) {
    std::size_t i = from;
    while (i < cubes.size() && covered[i]) ++i;
    if (i == cubes.size()) {
      if (!visit(Tiling::from_dominoes(chosen))) stopped = true;
      return;
    }
    const Cube c = cubes[i];
    covered[i] = 1;
    // Partners in +x, +y, +z order; all smaller neighbours of the first
    // uncovered cube are already covered, so these three suffice.
    for (Direction d : {Direction::PosX, Direction::PosY, Direction::PosZ}) {
      Cube p = c.shifted(d);
      int j = index_of(p);
      if (j < 0 || covered[j]) continue;
      covered[j] = 1;
      chosen.emplace_back(c, p);
      run(i + 1);
      chosen.pop_back();
      covered[j] = 0;
      if (stopped) break;
    }
    covered[i] = 0;
  }
};

}  // namespace

void for_each_tiling(const DuplexRegion& region,
                     const std::function<bool(const Tiling&)>& visit) {
  if (region.cubes().empty()) return;
  Enumerator e(region, visit);
  e.run(0);
}

std::vector<Tiling> enumerate_tilings(const DuplexRegion& region) {
  std::vector<Tiling> out;
  for_each_tiling(region, [&](const Tiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_tilings(const DuplexRegion& region) {
  std::uint64_t n = 0;
  for_each_tiling(region, [&](const Tiling&) {
    ++n;
    return true;
  });
  return n;
}

// ---------------------------------------------------------------------------
// Flips

namespace {

// If d2 is d1 translated one step along an axis other than its own, the two
// dominoes fill a 2x2x1 box and can be replaced by the perpendicular pair.
std::optional<Flip> flip_of_pair(const Domino& d1, const Domino& d2) {
  if (d1.axis() != d2.axis()) return std::nullopt;
  for (Axis b : {Axis::X, Axis::Y, Axis::Z}) {
    if (b == d1.axis()) continue;
    for (bool positive : {true, false}) {
      Direction step = direction_along(b, positive);
      if (d2.a == d1.a.shifted(step) && d2.b == d1.b.shifted(step)) {
        Domino p1(d1.a, d2.a);
        Domino p2(d1.b, d2.b);
        std::array<Domino, 2> removed{d1, d2};
        std::array<Domino, 2> placed{p1, p2};
        if (removed[1] < removed[0]) std::swap(removed[0], removed[1]);
        if (placed[1] < placed[0]) std::swap(placed[0], placed[1]);
        return Flip{removed, placed};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Flip> find_flips(const Tiling& t) {
  std::vector<Flip> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (auto f = flip_of_pair(t.dominoes[i], t.dominoes[j])) out.push_back(*f);
  return out;
}

Tiling apply_flip(const Tiling& t, const Flip& f) {
  if (!t.contains(f.removed[0]) || !t.contains(f.removed[1]))
    throw FlipError("FlipNotApplicable: removed pair " +
                    domino_str(f.removed[0]) + " " + domino_str(f.removed[1]) +
                    " not present");
  std::vector<Domino> ds;
  ds.reserve(t.size());
  for (const Domino& d : t.dominoes)
    if (d != f.removed[0] && d != f.removed[1]) ds.push_back(d);
  ds.push_back(f.placed[0]);
  ds.push_back(f.placed[1]);
  return Tiling::from_dominoes(std::move(ds));
}

FlipComponents flip_components(const std::vector<Tiling>& tilings) {
  std::map<Tiling, std::size_t> index;
  for (std::size_t i = 0; i < tilings.size(); ++i) index.emplace(tilings[i], i);

  FlipComponents out;
  out.component_of.assign(tilings.size(), SIZE_MAX);
  for (std::size_t start = 0; start < tilings.size(); ++start) {
    if (out.component_of[start] != SIZE_MAX) continue;
    std::size_t id = out.components.size();
    std::vector<std::size_t> members;
    std::queue<std::size_t> q;
    q.push(start);
    out.component_of[start] = id;
    while (!q.empty()) {
      std::size_t cur = q.front();
      q.pop();
      members.push_back(cur);
      for (const Flip& f : find_flips(tilings[cur])) {
        Tiling next = apply_flip(tilings[cur], f);
        auto it = index.find(next);
        if (it == index.end())
          throw std::logic_error("flip produced a tiling missing from the "
                                 "enumeration");
        if (out.component_of[it->second] == SIZE_MAX) {
          out.component_of[it->second] = id;
          q.push(it->second);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
  }
  return out;
}

FlipComponents flip_components(const DuplexRegion& region) {
  return flip_components(enumerate_tilings(region));
}

}  // namespace duplex
