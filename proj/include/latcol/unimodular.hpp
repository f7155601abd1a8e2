#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "latcol/checked.hpp"
#include "latcol/error.hpp"
#include "latcol/lattice.hpp"

namespace latcol {

// p -> M p + t with M an integer matrix of determinant +1 or -1.
class UnimodularAffineMap {
public:
  UnimodularAffineMap() = default;

  UnimodularAffineMap(Int m11, Int m12, Int m21, Int m22, Int tx = 0, Int ty = 0)
      : m11_(m11), m12_(m12), m21_(m21), m22_(m22), tx_(tx), ty_(ty) {
    const __int128 det = static_cast<__int128>(m11) * m22 - static_cast<__int128>(m12) * m21;
    if (det != 1 && det != -1)
      throw DomainError("matrix [[" + std::to_string(m11) + "," + std::to_string(m12) + "],[" +
                        std::to_string(m21) + "," + std::to_string(m22) +
                        "]] is not unimodular");
  }

  static UnimodularAffineMap identity() { return {}; }
  static UnimodularAffineMap translation(Int tx, Int ty) { return {1, 0, 0, 1, tx, ty}; }
  // (x, y) -> (x + t y, y); fixes the x-axis pointwise.
  static UnimodularAffineMap shear(Int t) { return {1, t, 0, 1}; }
  static UnimodularAffineMap flip_y() { return {1, 0, 0, -1}; }

  Int m11() const { return m11_; }
  Int m12() const { return m12_; }
  Int m21() const { return m21_; }
  Int m22() const { return m22_; }
  Int tx() const { return tx_; }
  Int ty() const { return ty_; }
  Int det() const { return m11_ * m22_ - m12_ * m21_; }

  bool is_identity() const { return *this == identity(); }

  friend bool operator==(const UnimodularAffineMap&, const UnimodularAffineMap&) = default;

private:
  Int m11_ = 1, m12_ = 0, m21_ = 0, m22_ = 1;
  Int tx_ = 0, ty_ = 0;
};

inline LatticePoint apply(const UnimodularAffineMap& f, const LatticePoint& p) {
  using namespace checked;
  return {add(add(mul(f.m11(), p.x), mul(f.m12(), p.y)), f.tx()),
          add(add(mul(f.m21(), p.x), mul(f.m22(), p.y)), f.ty())};
}

inline LatticeTriangle apply(const UnimodularAffineMap& f, const LatticeTriangle& t) {
  return {apply(f, t.v1()), apply(f, t.v2()), apply(f, t.v3())};
}

inline UnimodularAffineMap invert(const UnimodularAffineMap& f) {
  using namespace checked;
  // The inverse of M is adj(M) / det, and det is its own reciprocal.
  const Int det = f.det();
  const Int n11 = mul(det, f.m22()), n12 = mul(det, neg(f.m12()));
  const Int n21 = mul(det, neg(f.m21())), n22 = mul(det, f.m11());
  const Int tx = neg(add(mul(n11, f.tx()), mul(n12, f.ty())));
  const Int ty = neg(add(mul(n21, f.tx()), mul(n22, f.ty())));
  return {n11, n12, n21, n22, tx, ty};
}

// h = f o g, i.e. h(p) = f(g(p)).
inline UnimodularAffineMap compose(const UnimodularAffineMap& f, const UnimodularAffineMap& g) {
  using namespace checked;
  const Int m11 = add(mul(f.m11(), g.m11()), mul(f.m12(), g.m21()));
  const Int m12 = add(mul(f.m11(), g.m12()), mul(f.m12(), g.m22()));
  const Int m21 = add(mul(f.m21(), g.m11()), mul(f.m22(), g.m21()));
  const Int m22 = add(mul(f.m21(), g.m12()), mul(f.m22(), g.m22()));
  const LatticePoint t = apply(f, LatticePoint{g.tx(), g.ty()});
  return {m11, m12, m21, m22, t.x, t.y};
}

struct Bezout {
  Int c = 0;
  Int d = 0;
  Int g = 0;

  friend bool operator==(const Bezout&, const Bezout&) = default;
};

// c x + d y = g = gcd(x, y). Among all solutions, returns the one with the
// smallest |d|, then the smallest |c|.
inline Bezout bezout(Int x, Int y) {
  if (x == 0 && y == 0) throw DegenerateInput("bezout(0, 0) has no gcd");
  if (checked::abs(x) > (Int{1} << 62) || checked::abs(y) > (Int{1} << 62))
    throw RangeError("bezout operands exceed 2^62");

  // Extended Euclid on |x|, |y|, tracking only the y coefficient; c is
  // recovered from d below.
  Int r0 = x < 0 ? -x : x, r1 = y < 0 ? -y : y;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  const Int g = r0;
  const Int d = y < 0 ? -t0 : t0;

  // General solution: (c + k y/g, d - k x/g).
  const Int step_d = x / g;
  if (step_d == 0) {
    // x == 0: d is forced and c is free, since y/g = +-1.
    return {0, d, g};
  }
  const Int span = step_d < 0 ? -step_d : step_d;
  const Int r = euclid_mod(d, span);
  auto from_d = [&](Int dd) {
    const __int128 cc = (static_cast<__int128>(g) - static_cast<__int128>(dd) * y) / x;
    return Bezout{checked::narrow(cc), dd, g};
  };
  const Bezout first = from_d(r);
  const Bezout second = from_d(r - span);
  auto key = [](const Bezout& b) {
    return std::make_tuple(b.d < 0 ? -b.d : b.d, b.c < 0 ? -b.c : b.c, b.d < 0);
  };
  return key(first) <= key(second) ? first : second;
}

struct ShiftReduction {
  Int a_reduced = 0;
  Int t = 0;

  friend bool operator==(const ShiftReduction&, const ShiftReduction&) = default;
};

// a_reduced = a + t b with a_reduced in [0, b).
inline ShiftReduction shift_reduce(Int a, Int b) {
  if (b < 1) throw DomainError("shift_reduce requires b >= 1");
  const Int r = euclid_mod(a, b);
  return {r, checked::sub(r, a) / b};
}

// The triangle (0,0), (d,0), (a,b) with d >= 1, b >= 1 and 0 <= a < b.
struct CanonicalTriangle {
  Int d = 1;
  Int a = 0;
  Int b = 1;

  LatticeTriangle triangle() const { return {{0, 0}, {d, 0}, {a, b}}; }

  friend bool operator==(const CanonicalTriangle&, const CanonicalTriangle&) = default;
};

inline bool same_vertex_set(const LatticeTriangle& s, const LatticeTriangle& t) {
  auto a = s.vertices();
  auto b = t.vertices();
  std::sort(a.begin(), a.end(), row_major_less);
  std::sort(b.begin(), b.end(), row_major_less);
  return a == b;
}

struct Normalization {
  CanonicalTriangle canonical;
  UnimodularAffineMap witness;  // witness(t) has the canonical vertex set
};

// Normalizes with a fixed labeling: `origin` goes to (0,0), `base` to (d,0).
inline Normalization normalize_labeled(const LatticePoint& origin, const LatticePoint& base,
                                       const LatticePoint& apex) {
  const LatticeTriangle t{origin, base, apex};
  UnimodularAffineMap f = UnimodularAffineMap::translation(checked::neg(origin.x),
                                                           checked::neg(origin.y));
  const LatticePoint e = apply(f, base);
  const Bezout bz = bezout(e.x, e.y);
  // det = -(c x + d y)/g = -1; sends (x, y) to (g, 0).
  f = compose(UnimodularAffineMap(bz.c, bz.d, e.y / bz.g, -(e.x / bz.g)), f);

  LatticePoint top = apply(f, apex);
  if (top.y < 0) {
    f = compose(UnimodularAffineMap::flip_y(), f);
    top = apply(f, apex);
  }
  ensure(top.y > 0, "normalized apex on the base line");
  const ShiftReduction sr = shift_reduce(top.x, top.y);
  f = compose(UnimodularAffineMap::shear(sr.t), f);

  Normalization out{{bz.g, sr.a_reduced, top.y}, f};
  ensure(same_vertex_set(apply(f, t), out.canonical.triangle()),
         "normalization witness does not reach the canonical triangle");
  return out;
}

// Canonical representative of t's unimodular-affine class together with a map
// reaching it. Over all six vertex labelings, picks the lexicographically
// smallest (d, b, a); the first labeling wins ties.
inline Normalization normalize(const LatticeTriangle& t) {
  static constexpr std::array<std::array<int, 3>, 6> kOrders{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const auto& v = t.vertices();
  std::optional<Normalization> best;
  for (const auto& o : kOrders) {
    Normalization n = normalize_labeled(v[o[0]], v[o[1]], v[o[2]]);
    auto key = [](const CanonicalTriangle& c) { return std::make_tuple(c.d, c.b, c.a); };
    if (!best || key(n.canonical) < key(best->canonical)) best = n;
  }
  return *best;
}

// Every canonical-shaped triangle (0,0), (d,0), (a,b) with d b <= max_twice_area
// and 0 <= a < b. Each unimodular-affine class appears at least once.
inline std::vector<CanonicalTriangle> enumerate_canonical_forms(Int max_twice_area) {
  std::vector<CanonicalTriangle> out;
  for (Int d = 1; d <= max_twice_area; ++d)
    for (Int b = 1; d * b <= max_twice_area; ++b)
      for (Int a = 0; a < b; ++a) out.push_back({d, a, b});
  return out;
}

}  // namespace latcol
