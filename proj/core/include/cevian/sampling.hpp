#pragma once

#include <cstdint>
#include <random>

#include "cevian/rational.hpp"

namespace cevian {

/// Engine used by every seeded generator in the library. Its output sequence is
/// fixed by the standard, and the helpers below avoid the implementation-defined
/// std distributions, so generated instances are identical across toolchains.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by rejection sampling.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// p/q with p in [-9, 9] \ {0} and q in [1, 6].
Rational random_nonzero_rational(Rng& rng);

/// Nonzero and different from 1.
Rational random_rescale_factor(Rng& rng);

}  // namespace cevian
