#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "latcol/error.hpp"
#include "latcol/lattice.hpp"
#include "latcol/totient.hpp"

namespace latcol {

// An integer k is 2-collinear when every lattice triangle with exactly three
// boundary points and k interior points has all of its interior points on one
// line. Any such triangle is unimodular-affine equivalent to
// (0,0), (1,0), (a, 2k+1) with a in D_{2k+1}, which makes the question finite.

struct ClassifierLimits {
  Int max_k = 5000;  // bound for the exhaustive method
};

enum class Method { bruteforce, theorem };

inline const char* to_string(Method m) {
  return m == Method::bruteforce ? "bruteforce" : "theorem";
}

struct DSet {
  Int n = 1;
  std::vector<Int> members;  // ascending

  bool contains(Int a) const { return std::binary_search(members.begin(), members.end(), a); }
};

// Residues a in [0, n) with gcd(a, n) = gcd(a - 1, n) = 1.
inline DSet d_set(Int n) {
  if (n < 1 || n % 2 == 0)
    throw DomainError("d_set requires an odd n >= 1, got " + std::to_string(n));
  DSet out{n, {}};
  for (Int a = 0; a < n; ++a)
    if (gcd(a, n) == 1 && gcd(a - 1, n) == 1) out.members.push_back(a);
  return out;
}

inline LatticeTriangle candidate_triangle(Int k, Int a) {
  return {{0, 0}, {1, 0}, {a, checked::add(checked::mul(2, k), 1)}};
}

// One representative per canonical class with B = 3 and I = k.
inline std::vector<LatticeTriangle> candidate_triangles(Int k) {
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  std::vector<LatticeTriangle> out;
  for (Int a : d_set(2 * k + 1).members) {
    LatticeTriangle t = candidate_triangle(k, a);
    ensure(boundary_count(t) == 3, "candidate triangle has lattice points on an edge");
    ensure(interior_count_pick(t) == k, "candidate triangle has the wrong interior count");
    out.push_back(t);
  }
  return out;
}

struct ClassificationResult {
  Int k = 0;
  bool is_2_collinear = false;
  Method method = Method::bruteforce;
  // bruteforce: the a values whose triangles were scanned, up to the first
  // failure. theorem: the members of D_{2k+1} within [3, k].
  std::vector<Int> candidate_as;
  std::optional<LatticeTriangle> witness;
  std::optional<std::vector<LatticePoint>> witness_interior;
};

inline void check_witness(const ClassificationResult& r) {
  if (r.is_2_collinear) {
    ensure(!r.witness && !r.witness_interior, "2-collinear verdict carries a witness");
    return;
  }
  ensure(r.witness && r.witness_interior, "negative verdict without a witness");
  ensure(boundary_count(*r.witness) == 3, "witness boundary count is not 3");
  ensure(interior_count_pick(*r.witness) == r.k, "witness interior count is not k");
  ensure(static_cast<Int>(r.witness_interior->size()) == r.k, "witness interior list size");
  ensure(!collinear(*r.witness_interior), "witness interior points are collinear");
}

inline ClassificationResult is_2_collinear_bruteforce(Int k, const ClassifierLimits& limits = {}) {
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  if (k > limits.max_k)
    throw ResourceLimit("k = " + std::to_string(k) + " exceeds the exhaustive bound " +
                        std::to_string(limits.max_k));
  ClassificationResult r{k, true, Method::bruteforce, {}, {}, {}};
  for (const LatticeTriangle& t : candidate_triangles(k)) {
    r.candidate_as.push_back(t.v3().x);
    std::vector<LatticePoint> interior = interior_points(t);
    ensure(static_cast<Int>(interior.size()) == k, "row scan disagrees with Pick count");
    if (!collinear(interior)) {
      r.is_2_collinear = false;
      r.witness = t;
      r.witness_interior = std::move(interior);
      break;
    }
  }
  check_witness(r);
  return r;
}

// Decides k through the D-set count: if some a in [3, k] lies in D_{2k+1},
// the triangle (0,0), (1,0), (a, 2k+1) has at least two interior points on
// x = 1 and at least one off it.
inline ClassificationResult is_2_collinear_theorem(Int k) {
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  const Int n = checked::add(checked::mul(2, k), 1);
  const DSet d = d_set(n);

  ClassificationResult r{k, true, Method::theorem, {}, {}, {}};
  for (Int a : d.members)
    if (a >= 3 && a <= k) r.candidate_as.push_back(a);

  if (k >= 2) {
    const Int expected = (schemmel(n) - 3) / 2;
    ensure(static_cast<Int>(r.candidate_as.size()) == expected,
           "|S_k cap D_{2k+1}| != (phi(2k+1,1) - 3)/2");
  }

  if (!r.candidate_as.empty()) {
    r.is_2_collinear = false;
    r.witness = candidate_triangle(k, r.candidate_as.front());
    r.witness_interior = interior_points(*r.witness);
  }
  check_witness(r);
  return r;
}

struct BadkCheck {
  Int p = 0;                // floor((2k+1)/a)
  bool valid = false;       // 2 <= p <= k - 1
  Int interior_on_line = 0; // interior points of the witness on x = 1, counted
};

// Checks the counting step behind a non-collinearity witness: the witness
// (0,0), (1,0), (a, 2k+1) has p = floor((2k+1)/a) interior points on x = 1,
// and 2 <= p <= k - 1 forces a non-collinear interior.
inline BadkCheck badk_witness_check(Int k, Int a) {
  if (a < 3 || a > k)
    throw DomainError("badk_witness_check requires 3 <= a <= k, got a = " + std::to_string(a) +
                      ", k = " + std::to_string(k));
  const Int n = checked::add(checked::mul(2, k), 1);
  if (gcd(a, n) != 1 || gcd(a - 1, n) != 1)
    throw DomainError("a = " + std::to_string(a) + " is not in D_" + std::to_string(n));

  BadkCheck out;
  out.p = n / a;
  out.valid = out.p >= 2 && out.p <= k - 1;
  for (const LatticePoint& q : interior_points(candidate_triangle(k, a)))
    if (q.x == 1) ++out.interior_on_line;
  // a does not divide 2k+1, so (1, n/a) is never a lattice point and every
  // point (1, 1..p) is strictly inside.
  ensure(out.interior_on_line == out.p, "interior points on x = 1 differ from floor((2k+1)/a)");
  return out;
}

struct SurveyRow {
  ClassificationResult bruteforce;
  ClassificationResult theorem;
};

// Classifies every k in [k_min, k_max] by both methods. Rows come back in
// ascending k regardless of how the work is spread over threads.
inline std::vector<SurveyRow> survey(Int k_min, Int k_max, const ClassifierLimits& limits = {},
                                     unsigned threads = 1) {
  if (k_min < 1 || k_min > k_max)
    throw DomainError("survey requires 1 <= k_min <= k_max");
  if (k_max > limits.max_k)
    throw ResourceLimit("k_max = " + std::to_string(k_max) + " exceeds the exhaustive bound " +
                        std::to_string(limits.max_k));

  const auto count = static_cast<std::size_t>(k_max - k_min + 1);
  std::vector<std::optional<SurveyRow>> rows(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        const Int k = k_min + static_cast<Int>(i);
        SurveyRow row{is_2_collinear_bruteforce(k, limits), is_2_collinear_theorem(k)};
        ensure(row.bruteforce.is_2_collinear == row.theorem.is_2_collinear,
               "exhaustive and theorem methods disagree");
        rows[i] = std::move(row);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(count, 256)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SurveyRow> out;
  out.reserve(count);
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

inline std::vector<Int> two_collinear_values(const std::vector<SurveyRow>& rows) {
  std::vector<Int> out;
  for (const auto& r : rows)
    if (r.bruteforce.is_2_collinear) out.push_back(r.bruteforce.k);
  return out;
}

}  // namespace latcol
