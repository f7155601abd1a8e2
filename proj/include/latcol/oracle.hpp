#pragma once

// Brute-force bounding-box scans. These share nothing with the closed-form
// counts in lattice.hpp beyond the cross product, and exist to cross-check
// them. Cost is O(bounding-box area); use on small triangles only.

#include <algorithm>
#include <vector>

#include "latcol/lattice.hpp"

namespace latcol::oracle {

// p lies on the closed segment ab.
inline bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline Int segment_interior_scan(const LatticePoint& p, const LatticePoint& q) {
  Int count = 0;
  for (Int y = std::min(p.y, q.y); y <= std::max(p.y, q.y); ++y)
    for (Int x = std::min(p.x, q.x); x <= std::max(p.x, q.x); ++x) {
      const LatticePoint r{x, y};
      if (r != p && r != q && on_segment(p, q, r)) ++count;
    }
  return count;
}

struct ScanResult {
  std::vector<LatticePoint> interior;
  Int boundary = 0;
};

// Classifies every point of the bounding box as interior, boundary, or outside.
inline ScanResult scan_triangle(const LatticeTriangle& t) {
  const auto& v = t.vertices();
  const Int sign = cross(v[0], v[1], v[2]) > 0 ? 1 : -1;
  const auto [x_lo, x_hi] = std::minmax({v[0].x, v[1].x, v[2].x});
  const auto [y_lo, y_hi] = std::minmax({v[0].y, v[1].y, v[2].y});

  ScanResult out;
  for (Int y = y_lo; y <= y_hi; ++y)
    for (Int x = x_lo; x <= x_hi; ++x) {
      const LatticePoint p{x, y};
      const Int e0 = sign * cross(v[0], v[1], p);
      const Int e1 = sign * cross(v[1], v[2], p);
      const Int e2 = sign * cross(v[2], v[0], p);
      if (e0 > 0 && e1 > 0 && e2 > 0)
        out.interior.push_back(p);
      else if (e0 >= 0 && e1 >= 0 && e2 >= 0)
        ++out.boundary;
    }
  return out;
}

}  // namespace latcol::oracle
