#include "duplex/sock.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace duplex {

namespace {

std::string cell_str(const Cell& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

bool adjacent(const Cell& a, const Cell& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

}  // namespace

Cycle Cycle::make(std::vector<Cell> vertices, std::vector<int> floors) {
  const std::size_t n = vertices.size();
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("cycle length must be even and at least 4");
  if (floors.size() != n)
    throw std::invalid_argument("one floor tag per cycle edge required");
  std::set<Cell> seen(vertices.begin(), vertices.end());
  if (seen.size() != n)
    throw std::invalid_argument("cycle visits a vertex twice");
  for (std::size_t i = 0; i < n; ++i) {
    if (!adjacent(vertices[i], vertices[(i + 1) % n]))
      throw std::invalid_argument("cycle step from " + cell_str(vertices[i]) +
                                  " is not a unit step");
    if (floors[i] != 0 && floors[i] != 1)
      throw std::invalid_argument("floor tags must be 0 or 1");
    if (floors[i] == floors[(i + 1) % n])
      throw std::invalid_argument("floor tags must alternate");
  }
  Cycle c;
  c.vertices = std::move(vertices);
  c.floors = std::move(floors);
  return c;
}

bool Cycle::contains(const Cell& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Cycle Cycle::reversed() const {
  const std::size_t n = vertices.size();
  std::vector<Cell> vs(n);
  std::vector<int> fs(n);
  vs[0] = vertices[0];
  for (std::size_t i = 1; i < n; ++i) vs[i] = vertices[n - i];
  for (std::size_t i = 0; i < n; ++i) fs[i] = floors[(n - 1 - i + n) % n];
  return Cycle::make(std::move(vs), std::move(fs));
}

BaseGraph base_graph(const DuplexRegion& region) {
  BaseGraph g;
  g.vertices = region.base().cells();
  for (const Cell& c : g.vertices) {
    for (Cell n : {Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}})
      if (region.base().contains(n)) g.edges.emplace_back(c, n);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Sock project_sock(const Tiling& t) {
  Sock sock;

  // Planar edge -> per-floor domino presence.
  std::map<std::pair<Cell, Cell>, std::array<bool, 2>> edges;
  for (const Domino& d : t.dominoes) {
    if (!d.valid()) throw std::invalid_argument("malformed domino in tiling");
    if (d.vertical()) {
      sock.jewels.push_back(d.cell_a());
      continue;
    }
    Cell lo = d.cell_a();
    Cell hi = d.cell_b();
    if (hi < lo) std::swap(lo, hi);
    auto& present = edges[{lo, hi}];
    if (present[d.floor()])
      throw std::invalid_argument("overlapping dominoes in tiling");
    present[d.floor()] = true;
  }

  // A stacked parallel pair projects to the same edge on both floors; it
  // winds around nothing, so both ends become jewels.
  std::map<Cell, std::pair<Cell, int>> out_edge;  // tail -> (head, floor)
  std::map<Cell, int> in_degree;
  for (const auto& [key, present] : edges) {
    if (present[0] && present[1]) {
      sock.jewels.push_back(key.first);
      sock.jewels.push_back(key.second);
      continue;
    }
    int f = present[0] ? 0 : 1;
    // Orientation convention: floor-0 edges run black cell -> white cell,
    // floor-1 edges white -> black. This is the unique assignment (up to one
    // global flip) that gives every vertex one in- and one out-edge; the
    // global sign is fixed so cycle windings reproduce the pretwists
    // computed from the 3D tiling (see the ring calibration tests).
    const Cell& u = key.first;
    const Cell& v = key.second;
    bool u_black = vertex_color(u) > 0;
    Cell tail, head;
    if (f == 0) {
      tail = u_black ? u : v;
      head = u_black ? v : u;
    } else {
      tail = u_black ? v : u;
      head = u_black ? u : v;
    }
    if (!out_edge.emplace(tail, std::make_pair(head, f)).second)
      throw std::logic_error("projection gives vertex " + cell_str(tail) +
                             " two outgoing edges");
    ++in_degree[head];
  }

  // Degree law for a valid tiling: every non-jewel cell has exactly one
  // outgoing and one incoming edge.
  for (const auto& [head, deg] : in_degree) {
    if (deg != 1)
      throw std::logic_error("projection gives vertex " + cell_str(head) +
                             " in-degree " + std::to_string(deg));
    if (!out_edge.count(head))
      throw std::logic_error("projection gives vertex " + cell_str(head) +
                             " no outgoing edge");
  }
  if (in_degree.size() != out_edge.size())
    throw std::logic_error("projection degree mismatch");

  // Walk the permutation; out_edge is ordered, so each cycle is discovered
  // at its smallest vertex and the list comes out sorted by start vertex.
  std::set<Cell> visited;
  for (const auto& [start, first_step] : out_edge) {
    if (visited.count(start)) continue;
    std::vector<Cell> vs;
    std::vector<int> fs;
    Cell cur = start;
    do {
      visited.insert(cur);
      const auto& [head, f] = out_edge.at(cur);
      vs.push_back(cur);
      fs.push_back(f);
      cur = head;
    } while (cur != start);
    sock.cycles.push_back(Cycle::make(std::move(vs), std::move(fs)));
  }

  std::sort(sock.jewels.begin(), sock.jewels.end());
  return sock;
}

Domino cycle_edge_domino(const Cycle& c, std::size_t i) {
  const Cell& u = c.vertices[i];
  const Cell& v = c.vertices[(i + 1) % c.size()];
  int f = c.floors[i];
  return Domino(Cube{u.x, u.y, f}, Cube{v.x, v.y, f});
}

}  // namespace duplex
