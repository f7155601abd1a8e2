#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "latcol/checked.hpp"
#include "latcol/error.hpp"

namespace latcol {

struct LatticePoint {
  Int x = 0;
  Int y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Row-major order: by y, then by x.
inline bool row_major_less(const LatticePoint& a, const LatticePoint& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

inline std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline void require_in_range(const LatticePoint& p) {
  require_coord(p.x, "x");
  require_coord(p.y, "y");
}

// gcd of absolute values; gcd(0, 0) = 0.
inline Int gcd(Int a, Int b) { return std::gcd(checked::abs(a), checked::abs(b)); }

// Oriented cross product (a - o) x (b - o).
inline Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  const __int128 ax = static_cast<__int128>(a.x) - o.x;
  const __int128 ay = static_cast<__int128>(a.y) - o.y;
  const __int128 bx = static_cast<__int128>(b.x) - o.x;
  const __int128 by = static_cast<__int128>(b.y) - o.y;
  // Differences are below 2^65 in magnitude, so the products can overflow
  // int128 only for inputs far outside the supported range.
  constexpr __int128 kDiffLimit = static_cast<__int128>(1) << 62;
  if (ax > kDiffLimit || ax < -kDiffLimit || ay > kDiffLimit || ay < -kDiffLimit ||
      bx > kDiffLimit || bx < -kDiffLimit || by > kDiffLimit || by < -kDiffLimit)
    throw RangeError("cross product operands out of range");
  return checked::narrow(ax * by - ay * bx);
}

// Number of lattice points strictly between p and q.
inline Int segment_interior_count(const LatticePoint& p, const LatticePoint& q) {
  require_in_range(p);
  require_in_range(q);
  if (p == q) throw DegenerateSegment("segment endpoints coincide at " + to_string(p));
  return gcd(q.x - p.x, q.y - p.y) - 1;
}

// |cross(v2 - v1, v3 - v1)|; zero for collinear triples.
inline Int twice_area(const LatticePoint& v1, const LatticePoint& v2, const LatticePoint& v3) {
  return checked::abs(cross(v1, v2, v3));
}

class LatticeTriangle {
public:
  LatticeTriangle(LatticePoint v1, LatticePoint v2, LatticePoint v3) : v_{v1, v2, v3} {
    for (const auto& v : v_) require_in_range(v);
    if (cross(v1, v2, v3) == 0)
      throw DegenerateTriangle("vertices " + to_string(v1) + " " + to_string(v2) + " " +
                               to_string(v3) + " are collinear");
  }

  const LatticePoint& v1() const { return v_[0]; }
  const LatticePoint& v2() const { return v_[1]; }
  const LatticePoint& v3() const { return v_[2]; }
  const std::array<LatticePoint, 3>& vertices() const { return v_; }

  friend bool operator==(const LatticeTriangle&, const LatticeTriangle&) = default;

private:
  std::array<LatticePoint, 3> v_;
};

inline Int twice_area(const LatticeTriangle& t) { return twice_area(t.v1(), t.v2(), t.v3()); }

// B(T): the three vertices plus the lattice points inside each edge.
inline Int boundary_count(const LatticeTriangle& t) {
  return segment_interior_count(t.v1(), t.v2()) + segment_interior_count(t.v2(), t.v3()) +
         segment_interior_count(t.v3(), t.v1()) + 3;
}

// I(T) from Pick's theorem: 2A = B + 2I - 2.
inline Int interior_count_pick(const LatticeTriangle& t) {
  const Int doubled = twice_area(t) - boundary_count(t) + 2;
  ensure(doubled % 2 == 0 && doubled >= 0, "Pick parity violated");
  return doubled / 2;
}

struct TriangleStats {
  Int twice_area = 0;
  Int boundary = 0;
  Int interior = 0;

  friend bool operator==(const TriangleStats&, const TriangleStats&) = default;
};

inline TriangleStats stats(const LatticeTriangle& t) {
  TriangleStats s{twice_area(t), boundary_count(t), 0};
  s.interior = interior_count_pick(t);
  ensure(s.twice_area == s.boundary + 2 * s.interior - 2 && s.boundary >= 3,
         "triangle statistics violate Pick's theorem");
  return s;
}

// Every lattice point strictly inside t, in row-major order. Each row's open
// x-interval is found from the three edge half-planes with exact floor/ceil,
// so the cost is O(height + I).
inline std::vector<LatticePoint> interior_points(const LatticeTriangle& t) {
  auto v = t.vertices();
  if (cross(v[0], v[1], v[2]) < 0) std::swap(v[1], v[2]);  // counter-clockwise

  Int y_min = v[0].y, y_max = v[0].y;
  for (const auto& p : v) {
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }

  std::vector<LatticePoint> out;
  for (Int y = y_min + 1; y < y_max; ++y) {
    Int lo = std::numeric_limits<Int>::min();
    Int hi = std::numeric_limits<Int>::max();
    bool empty = false;
    for (int i = 0; i < 3 && !empty; ++i) {
      const LatticePoint& p = v[i];
      const LatticePoint& q = v[(i + 1) % 3];
      const Int dx = q.x - p.x;
      const Int dy = q.y - p.y;
      // Interior lies to the left: dx*(y - p.y) - dy*(x - p.x) > 0.
      const Int c = dx * (y - p.y);
      if (dy > 0) {
        hi = std::min(hi, p.x + ceil_div(c, dy) - 1);
      } else if (dy < 0) {
        lo = std::max(lo, p.x + floor_div(c, dy) + 1);
      } else if (c <= 0) {
        empty = true;
      }
    }
    if (empty) continue;
    for (Int x = lo; x <= hi; ++x) out.push_back({x, y});
  }
  return out;
}

// True iff every point lies on a single line. Lists with fewer than three
// distinct points are collinear.
inline bool collinear(std::span<const LatticePoint> points) {
  if (points.empty()) return true;
  const LatticePoint& first = points.front();
  const LatticePoint* second = nullptr;
  for (const auto& p : points) {
    if (p != first) {
      second = &p;
      break;
    }
  }
  if (second == nullptr) return true;
  for (const auto& p : points)
    if (cross(first, *second, p) != 0) return false;
  return true;
}

}  // namespace latcol
