#pragma once

#include <cstdint>

#include "freelp/tensors.hpp"

namespace freelp {

/// Complex Gaussian entries (independent standard normal real and imaginary
/// parts) from mt19937_64. Indices are visited in big-endian order and each
/// one is kept with probability `density`. Signed tensors go through
/// apply_projection_Q. Raises too_large when A^d exceeds `index_cap`.
CoeffTensor random_tensor(int n, int d, int m, Alphabet alphabet, std::uint64_t seed,
                          double density = 1.0, std::uint64_t index_cap = 1u << 20);

}  // namespace freelp
