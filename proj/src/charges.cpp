#include "duplex/charges.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace duplex {

namespace {

std::string cell_str(const Cell& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

struct BBox {
  int minx, maxx, miny, maxy;
};

BBox bbox_of(const Cycle& c) {
  BBox b{c.vertices[0].x, c.vertices[0].x, c.vertices[0].y, c.vertices[0].y};
  for (const Cell& v : c.vertices) {
    b.minx = std::min(b.minx, v.x);
    b.maxx = std::max(b.maxx, v.x);
    b.miny = std::min(b.miny, v.y);
    b.maxy = std::max(b.maxy, v.y);
  }
  return b;
}

// Shared crossing count in doubled coordinates, so integer and half-integer
// query points take one code path. The ray runs rightward from (px2/2, py2/2).
int winding_doubled(const Cycle& c, int px2, int py2) {
  int w = 0;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Cell& a = c.vertices[i];
    const Cell& b = c.vertices[(i + 1) % n];
    if (a.x != b.x) continue;  // horizontal edges never cross the ray
    if (2 * a.x <= px2) continue;
    int y0 = std::min(a.y, b.y);
    if (2 * y0 <= py2 && py2 < 2 * y0 + 2) w += b.y > a.y ? +1 : -1;
  }
  return w;
}

}  // namespace

std::array<HalfPoint, 4> corner_points(const Cell& v) {
  return {HalfPoint{v.x - 1, v.y - 1}, HalfPoint{v.x - 1, v.y},
          HalfPoint{v.x, v.y - 1}, HalfPoint{v.x, v.y}};
}

int winding_number(const Cycle& c, const HalfPoint& p) {
  return winding_doubled(c, 2 * p.x + 1, 2 * p.y + 1);
}

int winding_number(const Cycle& c, const Cell& p) {
  if (c.contains(p))
    throw CycleQueryError("PointOnCycle: winding undefined at " + cell_str(p));
  return winding_doubled(c, 2 * p.x, 2 * p.y);
}

Quarter angle(const Cycle& c, const Cell& v) {
  const std::size_t n = c.size();
  auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
  if (it == c.vertices.end())
    throw CycleQueryError("VertexNotOnCycle: no angle at " + cell_str(v));
  std::size_t i = static_cast<std::size_t>(it - c.vertices.begin());
  const Cell& prev = c.vertices[(i + n - 1) % n];
  const Cell& next = c.vertices[(i + 1) % n];
  int in_dx = v.x - prev.x, in_dy = v.y - prev.y;
  int out_dx = next.x - v.x, out_dy = next.y - v.y;
  int cross = in_dx * out_dy - in_dy * out_dx;  // +1 left, -1 right, 0 straight
  return Quarter::from_quarters(cross);
}

Quarter metric_weight(const Cycle& c, const Cell& v) {
  int sum = 0;
  for (const HalfPoint& p : corner_points(v)) sum += winding_number(c, p);
  return Quarter::from_quarters(sum);
}

Quarter topological_weight(const Cycle& c, const Cell& v) {
  std::array<int, 4> w;
  std::size_t i = 0;
  for (const HalfPoint& p : corner_points(v)) w[i++] = winding_number(c, p);
  std::sort(w.begin(), w.end());
  auto end = std::unique(w.begin(), w.end());
  std::int64_t sum = 0;
  std::int64_t count = 0;
  for (auto it = w.begin(); it != end; ++it) {
    sum += *it;
    ++count;
  }
  // A lattice cycle separates the corner points of v only along edges
  // incident to v, so at most two distinct values occur and the average is
  // an exact quarter.
  if ((4 * sum) % count != 0)
    throw std::logic_error("unexpected winding pattern around " + cell_str(v));
  return Quarter::from_quarters(4 * sum / count);
}

std::int64_t charge_interior(const Cycle& c) {
  BBox b = bbox_of(c);
  std::int64_t charge = 0;
  for (int y = b.miny; y <= b.maxy; ++y)
    for (int x = b.minx; x <= b.maxx; ++x) {
      Cell v{x, y};
      if (c.contains(v)) continue;
      charge += static_cast<std::int64_t>(vertex_color(v)) *
                winding_number(c, v);
    }
  return charge;
}

Quarter charge_boundary(const Cycle& c) {
  Quarter q;
  for (const Cell& v : c.vertices) q += angle(c, v) * vertex_color(v);
  return q;
}

void LaurentPoly::add(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::int64_t LaurentPoly::derivative_at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += static_cast<std::int64_t>(e) * c;
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent first reads like a polynomial.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, coef] = *it;
    if (first) {
      if (coef < 0) os << "-";
      first = false;
    } else {
      os << (coef < 0 ? " - " : " + ");
    }
    std::int64_t a = coef < 0 ? -coef : coef;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly p_polynomial(const Sock& s) {
  LaurentPoly p;
  auto exponent_at = [&](const Cell& v, const Cycle* own) {
    std::int64_t e = 0;
    for (const Cycle& c : s.cycles) {
      if (&c == own) continue;
      e += winding_number(c, v);
    }
    return e;
  };
  for (const Cell& v : s.jewels)
    p.add(static_cast<int>(exponent_at(v, nullptr)), vertex_color(v));
  for (const Cycle& c : s.cycles)
    for (const Cell& v : c.vertices)
      p.add(static_cast<int>(exponent_at(v, &c)), vertex_color(v));
  return p;
}

std::int64_t p_derivative_at_one(const LaurentPoly& p) {
  return p.derivative_at_one();
}

bool CycleLemmaReport::all_pass() const {
  for (const LemmaCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string CycleLemmaReport::first_failure() const {
  for (const LemmaCheck& c : checks)
    if (!c.pass) return c.name + ": " + c.detail;
  return "";
}

CycleLemmaReport verify_cycle_lemmas(const Cycle& c) {
  CycleLemmaReport report;
  auto check = [&](const std::string& name, bool pass, std::string detail) {
    report.checks.push_back(LemmaCheck{name, pass, pass ? "" : detail});
  };

  BBox b = bbox_of(c);
  const std::int64_t interior = charge_interior(c);

  // 3.2: color-weighted metric weights cancel.
  // 3.1: color-weighted topological weights reproduce the interior charge.
  // 3.3: the two weights differ by the turning angle exactly on the cycle.
  Quarter metric_sum, top_sum;
  bool diff_ok = true;
  std::string diff_detail;
  for (int y = b.miny - 1; y <= b.maxy + 1; ++y)
    for (int x = b.minx - 1; x <= b.maxx + 1; ++x) {
      Cell v{x, y};
      Quarter m = metric_weight(c, v);
      Quarter t = topological_weight(c, v);
      metric_sum += m * vertex_color(v);
      top_sum += t * vertex_color(v);
      Quarter expect = c.contains(v) ? angle(c, v) : Quarter{};
      if (diff_ok && t - m != expect) {
        diff_ok = false;
        diff_detail = "weight difference " + (t - m).str() + " at " +
                      cell_str(v) + ", expected " + expect.str();
      }
    }
  check("3.2", metric_sum == Quarter{},
        "color-weighted metric weights sum to " + metric_sum.str());
  check("3.1", top_sum == Quarter::from_whole(interior),
        "color-weighted topological weights sum to " + top_sum.str() +
            ", interior charge is " + std::to_string(interior));
  check("3.3", diff_ok, diff_detail);

  Quarter boundary = charge_boundary(c);
  check("3.4", boundary == Quarter::from_whole(interior),
        "boundary charge " + boundary.str() + ", interior charge " +
            std::to_string(interior));

  Quarter turning;
  for (const Cell& v : c.vertices) turning += angle(c, v);
  check("turning",
        turning == Quarter::from_whole(1) || turning == Quarter::from_whole(-1),
        "total turning " + turning.str());

  int color_sum = 0;
  for (const Cell& v : c.vertices) color_sum += vertex_color(v);
  check("colors", color_sum == 0,
        "cycle colors sum to " + std::to_string(color_sum));

  return report;
}

}  // namespace duplex
