#pragma once

#include <cstdint>
#include <random>

#include "hardy/core.hpp"

namespace hardy {

using Rng = std::mt19937_64;

/// Independent stream seed for item `index` of a run seeded with `seed` (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Real and imaginary parts independent standard normal.
Complex complex_gaussian(Rng& rng);

/// e^{i t}, t uniform on [-pi, pi).
Complex random_unimodular(Rng& rng);

/// Complex Gaussian direction scaled to unit norm.
CoeffVector random_unit_vector(std::size_t dim, Rng& rng);

}  // namespace hardy
