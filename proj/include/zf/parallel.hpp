#pragma once

#include <cstdint>
#include <random>

#include "zf/laws.hpp"

namespace zf {

// OpenMP team size, capped by ZETA_FORGE_THREADS when set to a positive integer.
int worker_threads();

// Per-instance generator; the stream depends only on (seed, stream, index).
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// 3..6 (or [min_atoms, max_atoms]) atoms uniform in [-3, 3], flat Dirichlet masses, standardized.
DiscreteLaw random_standardized_law(std::mt19937_64& rng, int min_atoms = 3, int max_atoms = 6);

}  // namespace zf
