#pragma once

#include <cstdint>
#include <vector>

namespace polyvdw {

/// Exact nonnegative-integer convolution.  Small outputs go through direct
/// schoolbook convolution; larger ones use a floating-point FFT whose rounded
/// result is validated against an exact number-theoretic transform modulo a
/// pseudo-randomly chosen 31-bit prime, plus a total-mass identity.  Throws
/// std::overflow_error when the result cannot be represented (total mass
/// above 2^64-1, or above 2^53 on the FFT path) and std::runtime_error when
/// validation fails.
std::vector<uint64_t> convolve_exact(const std::vector<uint64_t>& a,
                                     const std::vector<uint64_t>& b);

}  // namespace polyvdw
