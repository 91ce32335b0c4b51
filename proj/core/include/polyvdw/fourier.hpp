#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyvdw/counting.hpp"
#include "polyvdw/polynomial.hpp"
#include "polyvdw/util.hpp"

namespace polyvdw {

/// Samples of a trigonometric polynomial on the uniform grid theta_j = j/M.
/// When M exceeds the integrand's frequency span, the grid average equals
/// the true integral (discrete orthogonality), so identities evaluated this
/// way are exact up to floating-point noise.
struct FourierGrid {
    int64_t gridSize = 0;  // M
    std::vector<std::complex<double>> values;
    int64_t freqLo = 0, freqHi = 0;  // integer frequency support bounds

    std::complex<double> average() const;
};

/// Samples of the set transform: sum over x in A of e^(2 pi i theta x).
FourierGrid sample_set_transform(std::span<const int64_t> sortedSet, int64_t gridSize);

/// Samples of the phase sum F(theta) = sum over y in [n] of e^(2 pi i theta f(y)).
FourierGrid sample_phase_sum(const IntPolynomial& f, int64_t n, int64_t gridSize);

/// Number of solutions of z = x + f(y) with x, z in A, y in [n], evaluated
/// as the integral of |set transform|^2 * F on an alias-free grid and rounded
/// to an integer.  Must equal pair_count; throws std::runtime_error when the
/// imaginary part or the rounding residual exceeds 1e-6 * (result + 1).
uint64_t pair_integral(std::span<const int64_t> sortedSet, const IntPolynomial& f, int64_t n);

/// Integral of |F|^s on an alias-free grid, rounded; equals moment_count.
uint128 moment_integral(const CountingQuery& query);

/// The displayed inequality chain bounding the pair count:
///   lhs           = integral of |1_A hat|^2 F                    (the pair count)
///   holderBound   = (int |1_A hat|^(2s/(s-1)))^(1-1/s) (int |F|^s)^(1/s)
///   supBound      = (|A|^(2/(s-1)) int |1_A hat|^2)^(1-1/s) (int |F|^s)^(1/s)
///   parsevalForm  = (|A|^((s+1)/(s-1)))^(1-1/s) (int |F|^s)^(1/s)
/// lhs <= holderBound <= supBound = parsevalForm must hold to relative 1e-9;
/// a violation throws std::runtime_error naming the failing step.
struct HolderChainReport {
    double lhs = 0;
    double holderBound = 0;
    double supBound = 0;
    double parsevalForm = 0;
    double setTransformIntegral = 0;  // int |1_A hat|^2, equals |A| on-grid
    double momentIntegral = 0;        // int |F|^s
    int64_t gridSize = 0;
    bool verdict = false;
};

HolderChainReport holder_chain_report(std::span<const int64_t> sortedSet, const IntPolynomial& f,
                                      int64_t n, int s);

}  // namespace polyvdw
