#pragma once

#include <cstdint>
#include <random>

#include "riscf/linalg.hpp"

namespace riscf {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed);

/// Derives an independent stream seed from a base seed and a stream index
/// (splitmix64 finalizer). Parallel tasks must each get their own stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// z ~ CN(0, 1): real and imaginary parts N(0, 1/2).
Complex standard_complex_gaussian(Rng& rng);

CVector complex_gaussian_vector(int n, Rng& rng);

/// Fills an existing buffer, avoiding reallocation in sampling loops.
void fill_complex_gaussian(CVector& out, Rng& rng);

}  // namespace riscf
