// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "latcol/classifier.hpp"
#include "latcol/lattice.hpp"
#include "latcol/oracle.hpp"
#include "latcol/random.hpp"
#include "latcol/totient.hpp"
#include "latcol/unimodular.hpp"

using namespace latcol;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0: no stated bound
  std::function<Verdict()> check;
};

std::string set_text(const std::set<Int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Int v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  return os.str() + "}";
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

Verdict final_theorem() {
  Verdict v;
  const auto rows = survey(1, 200, {}, worker_count());
  std::set<Int> found;
  for (const auto& r : rows) {
    if (r.bruteforce.is_2_collinear != r.theorem.is_2_collinear)
      v.fail("methods disagree at k=" + std::to_string(r.bruteforce.k));
    if (r.bruteforce.is_2_collinear) found.insert(r.bruteforce.k);
  }
  if (rows.size() != 200) v.fail("expected 200 rows");
  if (found != std::set<Int>{1, 2, 4, 7}) v.fail("2-collinear set is " + set_text(found));
  v.detail = v.ok ? "2-collinear set in [1,200] = " + set_text(found) : v.detail;
  return v;
}

Verdict k_seven_detail() {
  Verdict v;
  if (d_set(15).members != std::vector<Int>{2, 8, 14}) v.fail("D_15 != {2,8,14}");
  const auto candidates = candidate_triangles(7);
  if (candidates.size() != 3) v.fail("expected 3 candidates");
  for (const auto& t : candidates) {
    const auto scan = oracle::scan_triangle(t);
    const std::string tag = "a=" + std::to_string(t.v3().x);
    if (boundary_count(t) != 3 || scan.boundary != 3) v.fail(tag + ": B != 3");
    if (interior_count_pick(t) != 7 || scan.interior.size() != 7) v.fail(tag + ": I != 7");
    if (!collinear(interior_points(t))) v.fail(tag + ": interior not collinear");
    for (const auto& p : scan.interior)
      if (p.x != 1) {
        v.fail(tag + ": interior point " + to_string(p) + " off x=1 (interior " +
               std::string(collinear(scan.interior) ? "collinear" : "not collinear") +
               " through " + to_string(scan.interior[0]) + ", " + to_string(scan.interior[1]) + ")");
        break;
      }
  }
  if (!is_2_collinear_bruteforce(7).is_2_collinear) v.fail("k=7 classified as not 2-collinear");
  if (v.ok) v.detail = "a in {2,8,14}; each B=3, I=7, interior on x=1";
  return v;
}

Verdict pick_equivalence() {
  Verdict v;
  Sampler rng(20250114);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const LatticeTriangle t = rng.triangle(-30, 30);
    const auto scan = oracle::scan_triangle(t);
    if (interior_count_pick(t) != static_cast<Int>(scan.interior.size()) ||
        boundary_count(t) != scan.boundary)
      ++mismatches;
  }
  if (mismatches) v.fail(std::to_string(mismatches) + " mismatches");
  else v.detail = "1000 triangles, 0 mismatches";
  return v;
}

Verdict totient_identities() {
  Verdict v;
  for (Int n = 1; n <= 5000; ++n)
    if (schemmel(n) != schemmel_bruteforce(n)) v.fail("schemmel mismatch at " + std::to_string(n));

  Int pairs = 0;
  for (Int m = 0; m <= 2; ++m)
    for (Int a = 1; a <= 300; ++a)
      for (Int b = 1; b <= 300; ++b) {
        if (gcd(a, b) != 1) continue;
        ++pairs;
        if (generalized_totient(a, m) * generalized_totient(b, m) != generalized_totient(a * b, m))
          v.fail("not multiplicative at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                 " m=" + std::to_string(m));
      }

  std::set<Int> small;
  for (Int n = 1; n <= 100000; n += 2)
    if (schemmel(n) < 5) small.insert(n);
  if (small != std::set<Int>{1, 3, 5, 9, 15}) v.fail("odd n with phi(n,1) < 5: " + set_text(small));
  if (v.ok)
    v.detail = "formula = count for n<=5000; " + std::to_string(pairs) +
               " coprime (a,b,m) triples multiplicative; small odd set " + set_text(small);
  return v;
}

Verdict unimodular_invariance() {
  Verdict v;
  Sampler rng(7);
  for (int i = 0; i < 500 && v.ok; ++i) {
    const LatticeTriangle t = rng.triangle(-30, 30);
    const UnimodularAffineMap f = rng.unimodular(4, 3, 100);
    const LatticeTriangle u = apply(f, t);
    if (!(stats(u) == stats(t))) v.fail("statistics changed");
    for (int e = 0; e < 3; ++e) {
      const auto& a = t.vertices()[e];
      const auto& b = t.vertices()[(e + 1) % 3];
      if (segment_interior_count(apply(f, a), apply(f, b)) != segment_interior_count(a, b))
        v.fail("edge lattice count changed");
    }
    if (collinear(interior_points(u)) != collinear(interior_points(t)))
      v.fail("collinearity verdict changed");
    const UnimodularAffineMap g = invert(f);
    for (const auto& p : t.vertices())
      if (apply(g, apply(f, p)) != p) v.fail("inverse does not round-trip");
  }
  if (v.ok) v.detail = "500 (triangle, map) pairs preserved";
  return v;
}

Verdict normalization_soundness() {
  Verdict v;
  Sampler rng(8);
  for (int i = 0; i < 500 && v.ok; ++i) {
    const LatticeTriangle t = rng.triangle(-30, 30);
    const Normalization n = normalize(t);
    const CanonicalTriangle& c = n.canonical;
    if (!(0 <= c.a && c.a < c.b && c.b > 0 && c.d >= 1)) v.fail("canonical bounds violated");
    if (c.d * c.b != twice_area(t)) v.fail("d*b != twice_area");
    if (!same_vertex_set(apply(n.witness, t), c.triangle())) v.fail("witness map fails");
    const Normalization again = normalize(c.triangle());
    if (!(again.canonical == c) || !again.witness.is_identity()) v.fail("not a fixed point");
  }
  if (v.ok) v.detail = "500 triangles normalized and verified";
  return v;
}

Verdict witness_validity() {
  Verdict v;
  int witnesses = 0;
  for (Int k = 1; k <= 200; ++k) {
    const ClassificationResult r = is_2_collinear_theorem(k);
    if (r.is_2_collinear) continue;
    ++witnesses;
    const LatticeTriangle& w = *r.witness;
    const std::string tag = "k=" + std::to_string(k);
    if (boundary_count(w) != 3) v.fail(tag + ": B != 3");
    if (interior_count_pick(w) != k) v.fail(tag + ": I != k");
    const auto pts = interior_points(w);
    if (static_cast<Int>(pts.size()) != k || collinear(pts)) v.fail(tag + ": interior collinear");
    const BadkCheck c = badk_witness_check(k, w.v3().x);
    if (!c.valid || c.p < 2 || c.p > k - 1) v.fail(tag + ": p out of [2, k-1]");
  }
  if (witnesses != 196) v.fail("expected 196 witnesses, got " + std::to_string(witnesses));
  if (v.ok) v.detail = std::to_string(witnesses) + " witnesses verified";
  return v;
}

Verdict interior_one_boundary_values() {
  Verdict v;
  std::set<Int> values;
  for (const CanonicalTriangle& c : enumerate_canonical_forms(18)) {
    const TriangleStats s = stats(c.triangle());
    if (s.interior == 1) values.insert(s.boundary);
  }
  if (values != std::set<Int>{3, 4, 6, 8, 9}) v.fail("B values with I=1: " + set_text(values));
  else v.detail = "B values with I=1: " + set_text(values);
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "final theorem: survey 1..200 gives {1,2,4,7}", 10.0, final_theorem},
      {2, "k=7 candidates {2,8,14}, all collinear on x=1", 0.0, k_seven_detail},
      {3, "Pick equivalence on 1000 random triangles", 5.0, pick_equivalence},
      {4, "totient identities", 30.0, totient_identities},
      {5, "unimodular invariance on 500 random pairs", 0.0, unimodular_invariance},
      {6, "normalization soundness on 500 random triangles", 0.0, normalization_soundness},
      {7, "witness validity for non-2-collinear k <= 200", 0.0, witness_validity},
      {8, "I=1 triangles have B in {3,4,6,8,9}", 1.0, interior_one_boundary_values},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s)
      v.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
    if (!v.ok) ++failures;
    std::printf("[%s] %d. %s (%.3f s): %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
