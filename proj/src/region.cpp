#include "duplex/region.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace duplex {

std::string to_string(BaseError e) {
  switch (e) {
    case BaseError::EmptyBase: return "EmptyBase";
    case BaseError::BadCharacter: return "BadCharacter";
    case BaseError::Disconnected: return "Disconnected";
    case BaseError::NotSimplyConnected: return "NotSimplyConnected";
  }
  return "UnknownBaseError";
}

InvalidBase::InvalidBase(BaseError code, const std::string& detail)
    : std::runtime_error(to_string(code) + ": " + detail), code_(code) {}

namespace {

const std::array<std::array<int, 2>, 4> kPlaneSteps = {
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

// Edge-connectivity over 4-neighbours.
bool is_connected(const std::vector<Cell>& cells) {
  std::set<Cell> todo(cells.begin(), cells.end());
  std::queue<Cell> q;
  q.push(cells.front());
  todo.erase(cells.front());
  while (!q.empty()) {
    Cell c = q.front();
    q.pop();
    for (auto s : kPlaneSteps) {
      Cell n{c.x + s[0], c.y + s[1]};
      auto it = todo.find(n);
      if (it != todo.end()) {
        todo.erase(it);
        q.push(n);
      }
    }
  }
  return todo.empty();
}

// Flood-fills the complement inside a margin-1 bounding box from the
// outside; any unreachable complement cell is an enclosed hole.
bool has_hole(const std::vector<Cell>& cells, Cell* hole) {
  std::set<Cell> shape(cells.begin(), cells.end());
  int minx = cells.front().x, maxx = cells.front().x;
  int miny = cells.front().y, maxy = cells.front().y;
  for (const Cell& c : cells) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  --minx; --miny; ++maxx; ++maxy;

  std::set<Cell> seen;
  std::queue<Cell> q;
  Cell corner{minx, miny};
  q.push(corner);
  seen.insert(corner);
  while (!q.empty()) {
    Cell c = q.front();
    q.pop();
    for (auto s : kPlaneSteps) {
      Cell n{c.x + s[0], c.y + s[1]};
      if (n.x < minx || n.x > maxx || n.y < miny || n.y > maxy) continue;
      if (shape.count(n) || seen.count(n)) continue;
      seen.insert(n);
      q.push(n);
    }
  }
  for (int y = miny; y <= maxy; ++y) {
    for (int x = minx; x <= maxx; ++x) {
      Cell c{x, y};
      if (!shape.count(c) && !seen.count(c)) {
        if (hole) *hole = c;
        return true;
      }
    }
  }
  return false;
}

std::string cell_str(const Cell& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

}  // namespace

BaseShape::BaseShape(std::vector<Cell> cells) : cells_(std::move(cells)) {
  min_ = max_ = cells_.front();
  for (const Cell& c : cells_) {
    min_.x = std::min(min_.x, c.x);
    min_.y = std::min(min_.y, c.y);
    max_.x = std::max(max_.x, c.x);
    max_.y = std::max(max_.y, c.y);
  }
}

BaseShape BaseShape::from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  if (cells.empty()) throw InvalidBase(BaseError::EmptyBase, "no cells");
  if (!is_connected(cells))
    throw InvalidBase(BaseError::Disconnected,
                      "cells do not form one edge-connected piece");
  Cell hole{};
  if (has_hole(cells, &hole))
    throw InvalidBase(BaseError::NotSimplyConnected,
                      "enclosed hole at " + cell_str(hole));
  return BaseShape(std::move(cells));
}

bool BaseShape::contains(const Cell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

BaseShape parse_base(const std::string& text) {
  std::vector<Cell> cells;
  int x = 0, y = 0;
  bool saw_any_char = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '\n') {
      ++y;
      x = 0;
      continue;
    }
    if (ch == '\r') continue;  // tolerate CRLF input
    saw_any_char = true;
    if (ch == '#')
      cells.push_back(Cell{x, y});
    else if (ch != '.')
      throw InvalidBase(BaseError::BadCharacter,
                        std::string("'") + ch + "' at line " +
                            std::to_string(y) + ", column " + std::to_string(x));
    ++x;
  }
  if (cells.empty())
    throw InvalidBase(BaseError::EmptyBase,
                      saw_any_char ? "no '#' in input" : "empty input");
  return BaseShape::from_cells(std::move(cells));
}

std::string base_to_ascii(const BaseShape& base) {
  Cell lo = base.min_corner();
  int dx = lo.x < 0 ? -lo.x : 0;
  int dy = lo.y < 0 ? -lo.y : 0;
  int w = base.max_corner().x + dx + 1;
  int h = base.max_corner().y + dy + 1;
  std::vector<std::string> grid(h, std::string(w, '.'));
  for (const Cell& c : base.cells()) grid[c.y + dy][c.x + dx] = '#';
  std::string out;
  for (int y = 0; y < h; ++y) {
    out += grid[y];
    if (y + 1 < h) out += '\n';
  }
  return out;
}

DuplexRegion::DuplexRegion(BaseShape base) : base_(std::move(base)) {
  cubes_.reserve(2 * base_.size());
  for (const Cell& c : base_.cells())
    for (int z = 0; z <= 1; ++z) cubes_.push_back(Cube{c.x, c.y, z});
  std::sort(cubes_.begin(), cubes_.end());
}

bool DuplexRegion::contains(const Cube& c) const {
  return std::binary_search(cubes_.begin(), cubes_.end(), c);
}

std::string DuplexRegion::summary() const {
  return std::to_string(base_.width()) + "x" + std::to_string(base_.height()) +
         " bounding box, " + std::to_string(base_.size()) + " cells, " +
         std::to_string(cubes_.size()) + " cubes";
}

DuplexRegion build_duplex(const BaseShape& base) { return DuplexRegion(base); }

}  // namespace duplex
