#pragma once

#include <cstdint>
#include <random>

#include "latcol/lattice.hpp"
#include "latcol/unimodular.hpp"

namespace latcol {

// Reproducible sampling. std::mt19937_64 is fully specified by the standard;
// values are mapped to ranges by plain modulo so that the streams do not
// depend on a library's distribution implementation.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  Int uniform(Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(engine_() % span);
  }

  LatticePoint point(Int lo, Int hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

  // Non-degenerate triangle with every coordinate in [lo, hi].
  LatticeTriangle triangle(Int lo, Int hi) {
    for (;;) {
      const LatticePoint a = point(lo, hi), b = point(lo, hi), c = point(lo, hi);
      if (cross(a, b, c) != 0) return {a, b, c};
    }
  }

  // Product of `steps` random elementary unimodular matrices (shears with
  // |t| <= max_shear, axis swaps, sign flips) followed by a translation.
  UnimodularAffineMap unimodular(int steps, Int max_shear, Int max_shift) {
    UnimodularAffineMap f;
    for (int i = 0; i < steps; ++i) {
      UnimodularAffineMap step;
      switch (uniform(0, 3)) {
        case 0: step = {1, uniform(-max_shear, max_shear), 0, 1}; break;
        case 1: step = {1, 0, uniform(-max_shear, max_shear), 1}; break;
        case 2: step = {0, 1, 1, 0}; break;
        default: step = {uniform(0, 1) ? 1 : -1, 0, 0, uniform(0, 1) ? 1 : -1}; break;
      }
      f = compose(step, f);
    }
    const Int tx = uniform(-max_shift, max_shift);
    const Int ty = uniform(-max_shift, max_shift);
    return compose(UnimodularAffineMap::translation(tx, ty), f);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace latcol
