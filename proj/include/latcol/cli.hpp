#pragma once

// Command-line front end. run() is the whole program minus process plumbing,
// so tests drive it with in-memory streams.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "latcol/classifier.hpp"
#include "latcol/lattice.hpp"
#include "latcol/oracle.hpp"
#include "latcol/random.hpp"
#include "latcol/report.hpp"
#include "latcol/totient.hpp"
#include "latcol/unimodular.hpp"

namespace latcol::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,
  kDomainError = 3,
  kResourceLimit = 4,
  kInternalError = 5,
};

// Largest interior point list `analyze` will materialize.
inline constexpr Int kMaxListedPoints = 1'000'000;
// Largest k accepted by the theorem method from the command line.
inline constexpr Int kMaxTheoremK = 10'000'000;
// Pick-check triangles are drawn with coordinates in [-kPickRange, kPickRange].
inline constexpr Int kPickRange = 30;

inline PickCheckReport pick_check(Int count, std::uint64_t seed) {
  PickCheckReport r{count, seed, 0, 0, 0};
  Sampler rng(seed);
  for (Int i = 0; i < count; ++i) {
    const LatticeTriangle t = rng.triangle(-kPickRange, kPickRange);
    const oracle::ScanResult scan = oracle::scan_triangle(t);
    if (interior_count_pick(t) != static_cast<Int>(scan.interior.size())) ++r.interior_mismatches;
    if (interior_points(t) != scan.interior) ++r.row_scan_mismatches;
    if (boundary_count(t) != scan.boundary) ++r.boundary_mismatches;
  }
  return r;
}

inline AnalyzeReport analyze(const LatticeTriangle& t) {
  const TriangleStats s = stats(t);
  if (s.interior > kMaxListedPoints)
    throw ResourceLimit("triangle has " + std::to_string(s.interior) +
                        " interior points; listing is capped at " +
                        std::to_string(kMaxListedPoints));
  std::vector<LatticePoint> pts = interior_points(t);
  const bool line = collinear(pts);
  const auto n = static_cast<Int>(pts.size());
  return {t, s, n, std::move(pts), line};
}

inline void require_theorem_k(Int k) {
  if (k > kMaxTheoremK)
    throw ResourceLimit("k = " + std::to_string(k) + " exceeds " + std::to_string(kMaxTheoremK));
}

inline ClassifyReport classify(Int k, const std::string& method, const ClassifierLimits& limits) {
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  require_theorem_k(k);
  ClassifyReport r{k, false, d_set(checked::add(checked::mul(2, k), 1)).members, {}};
  if (method == "brute" || method == "both")
    r.results.push_back(is_2_collinear_bruteforce(k, limits));
  if (method == "theorem" || method == "both") r.results.push_back(is_2_collinear_theorem(k));
  r.is_2_collinear = r.results.front().is_2_collinear;
  for (const auto& x : r.results)
    ensure(x.is_2_collinear == r.is_2_collinear, "exhaustive and theorem methods disagree");
  return r;
}

inline WitnessReport witness(Int k) {
  require_theorem_k(k);
  const ClassificationResult r = is_2_collinear_theorem(k);
  WitnessReport out{k, r.witness, r.witness_interior, std::nullopt};
  if (r.witness) out.check = badk_witness_check(k, r.witness->v3().x);
  return out;
}

namespace detail {

struct Emitter {
  std::string format = "text";
  std::string out_path;

  template <class Report>
  void emit(const Report& r, std::ostream& out) const {
    const std::string json = to_json(r).dump(2) + "\n";
    out << (format == "json" ? json : to_text(r));
    if (!out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw DomainError("cannot open output file '" + out_path + "'");
      file << json;
    }
  }
};

inline int report_error(std::ostream& err, int code, const std::string& kind,
                        const std::string& message) {
  std::string line = message;
  std::replace(line.begin(), line.end(), '\n', ' ');
  err << "error: " << kind << ": " << line << "\n";
  return code;
}

}  // namespace detail

// Runs one command; `args` excludes the program name. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice triangle statistics, unimodular normal forms, Schemmel totients and "
               "2-collinear classification",
               "latcol"};
  app.require_subcommand(1);
  app.fallthrough();

  detail::Emitter emitter;
  app.add_option("--format", emitter.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", emitter.out_path, "Also write the JSON report to PATH");

  std::vector<Int> coords;
  Int k = 0, m = 1, n = 0, k_min = 0, k_max = 0, max_k = ClassifierLimits{}.max_k;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string method = "both";

  auto* analyze_cmd =
      app.add_subcommand("analyze", "Twice-area, boundary and interior counts of a triangle");
  analyze_cmd->add_option("coords", coords, "x1 y1 x2 y2 x3 y3")->required()->expected(6);

  auto* normalize_cmd =
      app.add_subcommand("normalize", "Canonical form (0,0),(d,0),(a,b) and its witness map");
  normalize_cmd->add_option("coords", coords, "x1 y1 x2 y2 x3 y3")->required()->expected(6);

  auto* classify_cmd = app.add_subcommand("classify", "Decide whether k is 2-collinear");
  classify_cmd->add_option("k", k)->required();
  classify_cmd->add_option("--method", method, "brute, theorem or both")
      ->check(CLI::IsMember({"brute", "theorem", "both"}));
  classify_cmd->add_option("--max-k", max_k, "Bound for the exhaustive method");

  auto* witness_cmd = app.add_subcommand("witness", "Non-collinear witness triangle for k");
  witness_cmd->add_option("k", k)->required();

  auto* totient_cmd = app.add_subcommand("totient", "Generalized totient phi(k, m); m defaults to 1");
  totient_cmd->add_option("k", k)->required();
  totient_cmd->add_option("m", m);

  auto* dset_cmd = app.add_subcommand("dset", "Members of D_n for odd n");
  dset_cmd->add_option("n", n)->required();

  auto* survey_cmd = app.add_subcommand("survey", "Classify every k in [kmin, kmax] by both methods");
  survey_cmd->add_option("kmin", k_min)->required();
  survey_cmd->add_option("kmax", k_max)->required();
  survey_cmd->add_option("--max-k", max_k, "Bound for the exhaustive method");
  survey_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  auto* pick_cmd =
      app.add_subcommand("pick-check", "Pick's theorem against lattice scans on random triangles");
  pick_cmd->add_option("n", n)->required()->check(CLI::Range(Int{0}, Int{10'000'000}));
  pick_cmd->add_option("seed", seed)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return detail::report_error(err, kInvalidArguments, "invalid_arguments", e.what());
  }

  const ClassifierLimits limits{max_k};
  auto triangle = [&] {
    return LatticeTriangle{{coords[0], coords[1]}, {coords[2], coords[3]}, {coords[4], coords[5]}};
  };

  try {
    if (analyze_cmd->parsed()) {
      emitter.emit(analyze(triangle()), out);
    } else if (normalize_cmd->parsed()) {
      const LatticeTriangle t = triangle();
      const Normalization nf = normalize(t);
      emitter.emit(NormalizeReport{t, nf.canonical, nf.witness}, out);
    } else if (classify_cmd->parsed()) {
      emitter.emit(classify(k, method, limits), out);
    } else if (witness_cmd->parsed()) {
      emitter.emit(witness(k), out);
    } else if (totient_cmd->parsed()) {
      emitter.emit(TotientReport{k, m, generalized_totient(k, m)}, out);
    } else if (dset_cmd->parsed()) {
      emitter.emit(DSetReport{n, d_set(n).members}, out);
    } else if (survey_cmd->parsed()) {
      if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
      emitter.emit(make_survey_report(k_min, k_max, survey(k_min, k_max, limits, threads)), out);
    } else if (pick_cmd->parsed()) {
      const PickCheckReport r = pick_check(n, seed);
      emitter.emit(r, out);
      if (!r.ok())
        return detail::report_error(err, kInternalError, "invariant_failure",
                                    "Pick count disagrees with the lattice scan");
    }
  } catch (const InvariantFailure& e) {
    return detail::report_error(err, kInternalError, e.kind(), e.what());
  } catch (const ResourceLimit& e) {
    return detail::report_error(err, kResourceLimit, e.kind(), e.what());
  } catch (const Error& e) {
    return detail::report_error(err, kDomainError, e.kind(), e.what());
  } catch (const std::exception& e) {
    return detail::report_error(err, kInternalError, "internal_error", e.what());
  }
  return kOk;
}

}  // namespace latcol::cli
