#pragma once

// Independent reference implementations used to cross-check the library:
// a perfect-matching counter over the explicit cube-adjacency graph, an
// Euler-characteristic test for simple connectivity, a floating-point
// turning-accumulation winding number, and a flip-classes computation via
// pairwise symmetric differences. None of these share code with the library
// paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "duplex/charges.hpp"
#include "duplex/region.hpp"
#include "duplex/sock.hpp"
#include "duplex/tiling.hpp"

namespace oracles {

// --- perfect matchings -----------------------------------------------------

namespace detail {

struct MatchingCounter {
  const std::vector<std::vector<std::size_t>>& adj;
  std::vector<char> used;
  std::uint64_t count = 0;

  void run(std::size_t from) {
    std::size_t i = from;
    while (i < used.size() && used[i]) ++i;
    if (i == used.size()) {
      ++count;
      return;
    }
    used[i] = 1;
    for (std::size_t j : adj[i]) {
      if (used[j]) continue;
      used[j] = 1;
      run(i + 1);
      used[j] = 0;
    }
    used[i] = 0;
  }
};

}  // namespace detail

// Number of perfect matchings of the graph whose vertices are the region's
// cubes and whose edges join face-adjacent cubes.
inline std::uint64_t count_perfect_matchings(const duplex::DuplexRegion& region) {
  const std::vector<duplex::Cube>& cubes = region.cubes();
  const std::size_t n = cubes.size();
  if (n % 2 != 0) return 0;
  std::map<duplex::Cube, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[cubes[i]] = i;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (duplex::Direction d : duplex::kAllDirections) {
      auto it = index.find(cubes[i].shifted(d));
      if (it != index.end()) adj[i].push_back(it->second);
    }
  detail::MatchingCounter counter{adj, std::vector<char>(n, 0)};
  counter.run(0);
  return counter.count;
}

// --- simple connectivity via the Euler characteristic -----------------------

inline bool connected4(const std::vector<duplex::Cell>& cells) {
  if (cells.empty()) return false;
  std::set<duplex::Cell> pending(cells.begin(), cells.end());
  std::queue<duplex::Cell> frontier;
  frontier.push(*pending.begin());
  pending.erase(pending.begin());
  while (!frontier.empty()) {
    duplex::Cell c = frontier.front();
    frontier.pop();
    const duplex::Cell around[4] = {{c.x + 1, c.y}, {c.x - 1, c.y},
                                    {c.x, c.y + 1}, {c.x, c.y - 1}};
    for (const duplex::Cell& nb : around) {
      auto it = pending.find(nb);
      if (it != pending.end()) {
        pending.erase(it);
        frontier.push(nb);
      }
    }
  }
  return pending.empty();
}

// V - E + F of the square complex spanned by the cells. 1 for a disk.
inline int euler_characteristic(const std::vector<duplex::Cell>& cells) {
  std::set<duplex::Cell> vertices;
  std::set<std::pair<duplex::Cell, duplex::Cell>> edges;
  std::set<duplex::Cell> faces(cells.begin(), cells.end());
  auto edge = [&](duplex::Cell a, duplex::Cell b) {
    if (b < a) std::swap(a, b);
    edges.insert({a, b});
  };
  for (const duplex::Cell& c : faces) {
    duplex::Cell v00{c.x, c.y}, v10{c.x + 1, c.y};
    duplex::Cell v01{c.x, c.y + 1}, v11{c.x + 1, c.y + 1};
    vertices.insert({v00, v10, v01, v11});
    edge(v00, v10);
    edge(v10, v11);
    edge(v01, v11);
    edge(v00, v01);
  }
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
         static_cast<int>(faces.size());
}

inline bool is_disk(const std::vector<duplex::Cell>& cells) {
  return connected4(cells) && euler_characteristic(cells) == 1;
}

// --- winding by turning accumulation ----------------------------------------

// Total signed turning of the direction from (px, py) to the moving cycle
// vertex, in full laps. Uses floating point; exact for points off the cycle
// because every per-edge turn is strictly below a half lap.
inline int winding_by_turning(const duplex::Cycle& c, double px, double py) {
  constexpr double kPi = 3.14159265358979323846;
  double total = 0.0;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const duplex::Cell& a = c.vertices[i];
    const duplex::Cell& b = c.vertices[(i + 1) % n];
    double turn = std::atan2(b.y - py, b.x - px) - std::atan2(a.y - py, a.x - px);
    while (turn > kPi) turn -= 2 * kPi;
    while (turn < -kPi) turn += 2 * kPi;
    total += turn;
  }
  return static_cast<int>(std::lround(total / (2 * kPi)));
}

inline int winding_by_turning(const duplex::Cycle& c, const duplex::HalfPoint& p) {
  return winding_by_turning(c, p.x + 0.5, p.y + 0.5);
}

// --- flip classes by symmetric difference ------------------------------------

// Two tilings are one flip apart iff they disagree on exactly two dominoes
// each and those pairs cover the same four cubes.
inline bool one_flip_apart(const duplex::Tiling& a, const duplex::Tiling& b) {
  std::vector<duplex::Domino> only_a, only_b;
  std::set_difference(a.dominoes.begin(), a.dominoes.end(),
                      b.dominoes.begin(), b.dominoes.end(),
                      std::back_inserter(only_a));
  std::set_difference(b.dominoes.begin(), b.dominoes.end(),
                      a.dominoes.begin(), a.dominoes.end(),
                      std::back_inserter(only_b));
  if (only_a.size() != 2 || only_b.size() != 2) return false;
  auto cubes = [](const std::vector<duplex::Domino>& ds) {
    std::vector<duplex::Cube> cs;
    for (const duplex::Domino& d : ds) {
      cs.push_back(d.a);
      cs.push_back(d.b);
    }
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  return cubes(only_a) == cubes(only_b);
}

// Partition of tiling indices into flip classes, by union-find over all
// pairs. Quadratic; keep to small tiling sets.
inline std::vector<std::size_t> flip_classes(
    const std::vector<duplex::Tiling>& ts) {
  std::vector<std::size_t> parent(ts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (one_flip_apart(ts[i], ts[j])) parent[find(i)] = find(j);
  std::vector<std::size_t> cls(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) cls[i] = find(i);
  return cls;
}

}  // namespace oracles
