#pragma once

// Report records emitted by the command-line tool, with JSON (de)serialization
// and plain-text rendering. JSON keys are snake_case, values are integers,
// booleans, arrays or null; key order is fixed.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latcol/classifier.hpp"
#include "latcol/lattice.hpp"
#include "latcol/unimodular.hpp"

namespace latcol {

using Json = nlohmann::ordered_json;

// ---- building blocks -------------------------------------------------------

inline void to_json(Json& j, const LatticePoint& p) { j = Json::array({p.x, p.y}); }

inline void from_json(const Json& j, LatticePoint& p) {
  p.x = j.at(0).get<Int>();
  p.y = j.at(1).get<Int>();
}

inline Json triangle_json(const LatticeTriangle& t) {
  return Json::array({t.v1(), t.v2(), t.v3()});
}

inline LatticeTriangle triangle_from_json(const Json& j) {
  return {j.at(0).get<LatticePoint>(), j.at(1).get<LatticePoint>(), j.at(2).get<LatticePoint>()};
}

inline Json map_json(const UnimodularAffineMap& f) {
  return Json{{"matrix", Json::array({Json::array({f.m11(), f.m12()}),
                                      Json::array({f.m21(), f.m22()})})},
              {"translation", Json::array({f.tx(), f.ty()})}};
}

inline UnimodularAffineMap map_from_json(const Json& j) {
  const Json& m = j.at("matrix");
  const Json& t = j.at("translation");
  return {m.at(0).at(0).get<Int>(), m.at(0).at(1).get<Int>(), m.at(1).at(0).get<Int>(),
          m.at(1).at(1).get<Int>(), t.at(0).get<Int>(),       t.at(1).get<Int>()};
}

template <class T, class F>
Json optional_json(const std::optional<T>& v, F&& convert) {
  return v ? convert(*v) : Json(nullptr);
}

inline std::string points_text(const std::vector<LatticePoint>& pts) {
  std::string s = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + to_string(pts[i]);
  return s + "]";
}

inline std::string ints_text(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string triangle_text(const LatticeTriangle& t) {
  return to_string(t.v1()) + " " + to_string(t.v2()) + " " + to_string(t.v3());
}

// ---- ClassificationResult --------------------------------------------------

inline Json result_json(const ClassificationResult& r) {
  return Json{{"k", r.k},
              {"is_2_collinear", r.is_2_collinear},
              {"method", to_string(r.method)},
              {"candidate_as", r.candidate_as},
              {"witness", optional_json(r.witness, triangle_json)},
              {"witness_interior",
               optional_json(r.witness_interior, [](const auto& v) { return Json(v); })}};
}

inline ClassificationResult result_from_json(const Json& j) {
  ClassificationResult r;
  r.k = j.at("k").get<Int>();
  r.is_2_collinear = j.at("is_2_collinear").get<bool>();
  const auto method = j.at("method").get<std::string>();
  if (method != "bruteforce" && method != "theorem")
    throw DomainError("unknown method '" + method + "'");
  r.method = method == "bruteforce" ? Method::bruteforce : Method::theorem;
  r.candidate_as = j.at("candidate_as").get<std::vector<Int>>();
  if (!j.at("witness").is_null()) r.witness = triangle_from_json(j.at("witness"));
  if (!j.at("witness_interior").is_null())
    r.witness_interior = j.at("witness_interior").get<std::vector<LatticePoint>>();
  return r;
}

inline bool operator==(const ClassificationResult& a, const ClassificationResult& b) {
  return a.k == b.k && a.is_2_collinear == b.is_2_collinear && a.method == b.method &&
         a.candidate_as == b.candidate_as && a.witness == b.witness &&
         a.witness_interior == b.witness_interior;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeReport {
  LatticeTriangle triangle;
  TriangleStats stats;
  Int interior_oracle = 0;
  std::vector<LatticePoint> interior_points;
  bool collinear = false;

  friend bool operator==(const AnalyzeReport&, const AnalyzeReport&) = default;
};

inline Json to_json(const AnalyzeReport& r) {
  return Json{{"command", "analyze"},
              {"vertices", triangle_json(r.triangle)},
              {"twice_area", r.stats.twice_area},
              {"boundary", r.stats.boundary},
              {"interior_pick", r.stats.interior},
              {"interior_oracle", r.interior_oracle},
              {"interior_points", r.interior_points},
              {"collinear", r.collinear}};
}

inline AnalyzeReport analyze_from_json(const Json& j) {
  return {triangle_from_json(j.at("vertices")),
          {j.at("twice_area").get<Int>(), j.at("boundary").get<Int>(),
           j.at("interior_pick").get<Int>()},
          j.at("interior_oracle").get<Int>(),
          j.at("interior_points").get<std::vector<LatticePoint>>(),
          j.at("collinear").get<bool>()};
}

inline std::string to_text(const AnalyzeReport& r) {
  std::ostringstream os;
  os << "triangle: " << triangle_text(r.triangle) << "\n"
     << "twice_area: " << r.stats.twice_area << "\n"
     << "boundary: " << r.stats.boundary << "\n"
     << "interior (pick): " << r.stats.interior << "\n"
     << "interior (scan): " << r.interior_oracle << "\n"
     << "interior points: " << points_text(r.interior_points) << "\n"
     << "collinear: " << (r.collinear ? "yes" : "no") << "\n";
  return os.str();
}

// ---- normalize -------------------------------------------------------------

struct NormalizeReport {
  LatticeTriangle triangle;
  CanonicalTriangle canonical;
  UnimodularAffineMap witness;

  friend bool operator==(const NormalizeReport&, const NormalizeReport&) = default;
};

inline Json to_json(const NormalizeReport& r) {
  return Json{{"command", "normalize"},
              {"vertices", triangle_json(r.triangle)},
              {"canonical", Json{{"d", r.canonical.d}, {"a", r.canonical.a}, {"b", r.canonical.b}}},
              {"witness", map_json(r.witness)}};
}

inline NormalizeReport normalize_from_json(const Json& j) {
  const Json& c = j.at("canonical");
  return {triangle_from_json(j.at("vertices")),
          {c.at("d").get<Int>(), c.at("a").get<Int>(), c.at("b").get<Int>()},
          map_from_json(j.at("witness"))};
}

inline std::string to_text(const NormalizeReport& r) {
  const auto& f = r.witness;
  std::ostringstream os;
  os << "triangle: " << triangle_text(r.triangle) << "\n"
     << "canonical: (0,0) (" << r.canonical.d << ",0) (" << r.canonical.a << ","
     << r.canonical.b << ")\n"
     << "d a b: " << r.canonical.d << " " << r.canonical.a << " " << r.canonical.b << "\n"
     << "witness: [[" << f.m11() << "," << f.m12() << "],[" << f.m21() << "," << f.m22()
     << "]] + (" << f.tx() << "," << f.ty() << ")\n";
  return os.str();
}

// ---- classify --------------------------------------------------------------

struct ClassifyReport {
  Int k = 0;
  bool is_2_collinear = false;
  std::vector<Int> candidate_as;  // D_{2k+1}: every canonical a covered
  std::vector<ClassificationResult> results;

  friend bool operator==(const ClassifyReport&, const ClassifyReport&) = default;
};

inline Json to_json(const ClassifyReport& r) {
  Json results = Json::array();
  for (const auto& x : r.results) results.push_back(result_json(x));
  return Json{{"command", "classify"},
              {"k", r.k},
              {"is_2_collinear", r.is_2_collinear},
              {"candidate_as", r.candidate_as},
              {"results", results}};
}

inline ClassifyReport classify_from_json(const Json& j) {
  ClassifyReport r{j.at("k").get<Int>(), j.at("is_2_collinear").get<bool>(),
                   j.at("candidate_as").get<std::vector<Int>>(), {}};
  for (const auto& x : j.at("results")) r.results.push_back(result_from_json(x));
  return r;
}

inline std::string to_text(const ClassifyReport& r) {
  std::ostringstream os;
  os << "k: " << r.k << "\n"
     << "2-collinear: " << (r.is_2_collinear ? "yes" : "no") << "\n"
     << "candidate a: " << ints_text(r.candidate_as) << "\n";
  for (const auto& x : r.results) {
    os << "[" << to_string(x.method) << "] " << (x.is_2_collinear ? "2-collinear" : "not 2-collinear");
    if (x.witness) os << "; witness " << triangle_text(*x.witness);
    os << "\n";
  }
  return os.str();
}

// ---- witness ---------------------------------------------------------------

struct WitnessReport {
  Int k = 0;
  std::optional<LatticeTriangle> witness;
  std::optional<std::vector<LatticePoint>> interior;
  std::optional<BadkCheck> check;

  friend bool operator==(const WitnessReport& a, const WitnessReport& b) {
    const bool checks_equal =
        a.check.has_value() == b.check.has_value() &&
        (!a.check || (a.check->p == b.check->p && a.check->valid == b.check->valid &&
                      a.check->interior_on_line == b.check->interior_on_line));
    return a.k == b.k && a.witness == b.witness && a.interior == b.interior && checks_equal;
  }
};

inline Json to_json(const WitnessReport& r) {
  return Json{{"command", "witness"},
              {"k", r.k},
              {"has_witness", r.witness.has_value()},
              {"witness", optional_json(r.witness, triangle_json)},
              {"witness_interior", optional_json(r.interior, [](const auto& v) { return Json(v); })},
              {"p", optional_json(r.check, [](const BadkCheck& c) { return Json(c.p); })},
              {"p_valid", optional_json(r.check, [](const BadkCheck& c) { return Json(c.valid); })},
              {"interior_on_x1",
               optional_json(r.check, [](const BadkCheck& c) { return Json(c.interior_on_line); })}};
}

inline WitnessReport witness_from_json(const Json& j) {
  WitnessReport r;
  r.k = j.at("k").get<Int>();
  if (!j.at("witness").is_null()) r.witness = triangle_from_json(j.at("witness"));
  if (!j.at("witness_interior").is_null())
    r.interior = j.at("witness_interior").get<std::vector<LatticePoint>>();
  if (!j.at("p").is_null())
    r.check = BadkCheck{j.at("p").get<Int>(), j.at("p_valid").get<bool>(),
                        j.at("interior_on_x1").get<Int>()};
  return r;
}

inline std::string to_text(const WitnessReport& r) {
  std::ostringstream os;
  os << "k: " << r.k << "\n";
  if (!r.witness) {
    os << "no witness: " << r.k << " is 2-collinear\n";
    return os.str();
  }
  os << "witness: " << triangle_text(*r.witness) << "\n"
     << "interior points: " << points_text(*r.interior) << "\n";
  if (r.check)
    os << "points on x=1: " << r.check->p << " (2 <= p <= k-1: " << (r.check->valid ? "yes" : "no")
       << ")\n";
  return os.str();
}

// ---- totient / dset --------------------------------------------------------

struct TotientReport {
  Int k = 0;
  Int m = 1;
  Int value = 0;

  friend bool operator==(const TotientReport&, const TotientReport&) = default;
};

inline Json to_json(const TotientReport& r) {
  return Json{{"command", "totient"}, {"k", r.k}, {"m", r.m}, {"value", r.value}};
}

inline TotientReport totient_from_json(const Json& j) {
  return {j.at("k").get<Int>(), j.at("m").get<Int>(), j.at("value").get<Int>()};
}

inline std::string to_text(const TotientReport& r) { return std::to_string(r.value) + "\n"; }

struct DSetReport {
  Int n = 1;
  std::vector<Int> members;

  friend bool operator==(const DSetReport&, const DSetReport&) = default;
};

inline Json to_json(const DSetReport& r) {
  return Json{{"command", "dset"}, {"n", r.n}, {"size", r.members.size()}, {"members", r.members}};
}

inline DSetReport dset_from_json(const Json& j) {
  return {j.at("n").get<Int>(), j.at("members").get<std::vector<Int>>()};
}

inline std::string to_text(const DSetReport& r) {
  return "D_" + std::to_string(r.n) + " = " + ints_text(r.members) + "\n";
}

// ---- survey ----------------------------------------------------------------

struct SurveyEntry {
  Int k = 0;
  bool is_2_collinear = false;
  std::optional<Int> bruteforce_witness_a;
  std::optional<Int> theorem_witness_a;

  friend bool operator==(const SurveyEntry&, const SurveyEntry&) = default;
};

struct SurveyReport {
  Int k_min = 1;
  Int k_max = 1;
  std::vector<SurveyEntry> rows;
  std::vector<Int> two_collinear;

  friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

inline SurveyReport make_survey_report(Int k_min, Int k_max, const std::vector<SurveyRow>& rows) {
  SurveyReport r{k_min, k_max, {}, two_collinear_values(rows)};
  auto witness_a = [](const ClassificationResult& x) -> std::optional<Int> {
    if (!x.witness) return std::nullopt;
    return x.witness->v3().x;
  };
  for (const auto& row : rows)
    r.rows.push_back({row.bruteforce.k, row.bruteforce.is_2_collinear, witness_a(row.bruteforce),
                      witness_a(row.theorem)});
  return r;
}

inline Json to_json(const SurveyReport& r) {
  Json rows = Json::array();
  for (const auto& e : r.rows)
    rows.push_back(Json{{"k", e.k},
                        {"is_2_collinear", e.is_2_collinear},
                        {"bruteforce_witness_a",
                         optional_json(e.bruteforce_witness_a, [](Int a) { return Json(a); })},
                        {"theorem_witness_a",
                         optional_json(e.theorem_witness_a, [](Int a) { return Json(a); })}});
  return Json{{"command", "survey"},
              {"k_min", r.k_min},
              {"k_max", r.k_max},
              {"rows", rows},
              {"two_collinear", r.two_collinear}};
}

inline SurveyReport survey_from_json(const Json& j) {
  SurveyReport r{j.at("k_min").get<Int>(), j.at("k_max").get<Int>(), {},
                 j.at("two_collinear").get<std::vector<Int>>()};
  auto opt = [](const Json& v) -> std::optional<Int> {
    if (v.is_null()) return std::nullopt;
    return v.get<Int>();
  };
  for (const auto& e : j.at("rows"))
    r.rows.push_back({e.at("k").get<Int>(), e.at("is_2_collinear").get<bool>(),
                      opt(e.at("bruteforce_witness_a")), opt(e.at("theorem_witness_a"))});
  return r;
}

inline std::string to_text(const SurveyReport& r) {
  std::ostringstream os;
  for (const auto& e : r.rows) {
    os << "k=" << e.k << " " << (e.is_2_collinear ? "2-collinear" : "not 2-collinear");
    if (e.theorem_witness_a) os << " (witness a=" << *e.theorem_witness_a << ")";
    os << "\n";
  }
  os << "2-collinear in [" << r.k_min << "," << r.k_max << "]: " << ints_text(r.two_collinear)
     << "\n";
  return os.str();
}

// ---- pick-check ------------------------------------------------------------

struct PickCheckReport {
  Int count = 0;
  std::uint64_t seed = 0;
  Int interior_mismatches = 0;  // Pick count vs bounding-box scan
  Int row_scan_mismatches = 0;  // row-scan point list vs bounding-box scan
  Int boundary_mismatches = 0;  // gcd boundary count vs bounding-box scan

  bool ok() const {
    return interior_mismatches == 0 && row_scan_mismatches == 0 && boundary_mismatches == 0;
  }

  friend bool operator==(const PickCheckReport&, const PickCheckReport&) = default;
};

inline Json to_json(const PickCheckReport& r) {
  return Json{{"command", "pick-check"},
              {"count", r.count},
              {"seed", r.seed},
              {"interior_mismatches", r.interior_mismatches},
              {"row_scan_mismatches", r.row_scan_mismatches},
              {"boundary_mismatches", r.boundary_mismatches},
              {"ok", r.ok()}};
}

inline PickCheckReport pick_check_from_json(const Json& j) {
  return {j.at("count").get<Int>(), j.at("seed").get<std::uint64_t>(),
          j.at("interior_mismatches").get<Int>(), j.at("row_scan_mismatches").get<Int>(),
          j.at("boundary_mismatches").get<Int>()};
}

inline std::string to_text(const PickCheckReport& r) {
  std::ostringstream os;
  os << "triangles: " << r.count << " (seed " << r.seed << ")\n"
     << "interior mismatches: " << r.interior_mismatches << "\n"
     << "row-scan mismatches: " << r.row_scan_mismatches << "\n"
     << "boundary mismatches: " << r.boundary_mismatches << "\n"
     << (r.ok() ? "ok" : "FAILED") << "\n";
  return os.str();
}

}  // namespace latcol
