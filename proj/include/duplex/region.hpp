#pragma once

// Planar base shapes and the two-floor regions built on top of them.

#include <stdexcept>
#include <string>
#include <vector>

#include "duplex/lattice.hpp"

namespace duplex {

enum class BaseError { EmptyBase, BadCharacter, Disconnected, NotSimplyConnected };

std::string to_string(BaseError e);

class InvalidBase : public std::runtime_error {
 public:
  InvalidBase(BaseError code, const std::string& detail);
  BaseError code() const { return code_; }

 private:
  BaseError code_;
};

// Finite polyomino: nonempty, edge-connected, simply connected (cells
// touching only at a corner do not count as connected). Cells are sorted
// and the shape is immutable after construction.
class BaseShape {
 public:
  // Validates; throws InvalidBase. Duplicate cells are merged.
  static BaseShape from_cells(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(const Cell& c) const;

  Cell min_corner() const { return min_; }
  Cell max_corner() const { return max_; }
  int width() const { return max_.x - min_.x + 1; }
  int height() const { return max_.y - min_.y + 1; }

  friend bool operator==(const BaseShape& a, const BaseShape& b) {
    return a.cells_ == b.cells_;
  }

 private:
  explicit BaseShape(std::vector<Cell> cells);

  std::vector<Cell> cells_;
  Cell min_{0, 0};
  Cell max_{0, 0};
};

// Text form: '#' is a cell, '.' is empty; column index is x and line index
// is y. Any other character (except line breaks) is rejected.
BaseShape parse_base(const std::string& text);

// Inverse of parse_base up to '.'-padding; shapes with negative coordinates
// are translated so the emitted grid starts at (0,0).
std::string base_to_ascii(const BaseShape& base);

// The base crossed with two floors z=0 and z=1. Cubes are sorted
// lexicographically by (x, y, z).
class DuplexRegion {
 public:
  explicit DuplexRegion(BaseShape base);

  const BaseShape& base() const { return base_; }
  const std::vector<Cube>& cubes() const { return cubes_; }
  bool contains(const Cube& c) const;
  std::string summary() const;  // e.g. "3x3 bounding box, 9 cells, 18 cubes"

 private:
  BaseShape base_;
  std::vector<Cube> cubes_;
};

DuplexRegion build_duplex(const BaseShape& base);

}  // namespace duplex
