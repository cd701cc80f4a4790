#pragma once

// Planar projection of a tiling: vertical dominoes become jewels, horizontal
// dominoes become floor-tagged edges that close up into oriented cycles.

#include <cstddef>
#include <vector>

#include "duplex/lattice.hpp"
#include "duplex/region.hpp"
#include "duplex/tiling.hpp"

namespace duplex {

// Oriented simple lattice cycle. Edge i runs vertices[i] ->
// vertices[(i+1) % n] and carries the floor of the horizontal domino it came
// from; floors alternate 0,1 around the cycle, so the length is even (>= 4).
// Orientation is part of the value.
struct Cycle {
  std::vector<Cell> vertices;
  std::vector<int> floors;

  // Validates all invariants; throws std::invalid_argument.
  static Cycle make(std::vector<Cell> vertices, std::vector<int> floors);

  std::size_t size() const { return vertices.size(); }
  bool contains(const Cell& v) const;
  Cycle reversed() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Jewels plus cycles; together their cells partition the base. Cycles are
// canonical: each starts at its smallest vertex and they are listed by start
// vertex; jewels are sorted.
struct Sock {
  std::vector<Cell> jewels;
  std::vector<Cycle> cycles;

  friend bool operator==(const Sock&, const Sock&) = default;
};

// Plane graph on the base cells with an edge per adjacent cell pair.
struct BaseGraph {
  std::vector<Cell> vertices;
  std::vector<std::pair<Cell, Cell>> edges;  // each pair sorted, list sorted
};

BaseGraph base_graph(const DuplexRegion& region);

// Projects a valid tiling. Stacked parallel horizontal pairs (the same edge
// on both floors) are normalized away into two jewels, so no trivial cycles
// remain.
Sock project_sock(const Tiling& t);

// The horizontal domino that produced edge i of the cycle.
Domino cycle_edge_domino(const Cycle& c, std::size_t i);

}  // namespace duplex
