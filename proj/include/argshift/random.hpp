#pragma once

#include <cstdint>
#include <random>

#include "argshift/poly.hpp"
#include "argshift/rational.hpp"

namespace argshift {

/// Reports depend only on the raw output of this engine (no standard
/// distributions), so a fixed seed gives identical bytes across toolchains.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
inline long uniform_int(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random rational p/q with p in [-range, range] and q in [1, range].
Rational random_rational(Rng& rng, long range = 9);

/// Random polynomial with up to `terms` terms of degree <= max_degree.
SparsePoly random_poly(Rng& rng, std::size_t nvars, unsigned max_degree, unsigned terms);

}  // namespace argshift
