#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyvdw {

using uint128 = unsigned __int128;
using int128 = __int128;

// Checked signed 64-bit arithmetic: exact result or a loud failure, never a
// silent wrap.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline int64_t checked_abs(int64_t a) {
    if (a == INT64_MIN) throw std::overflow_error("64-bit overflow in |INT64_MIN|");
    return a < 0 ? -a : a;
}

std::string to_decimal(uint128 value);

inline constexpr uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ull;

// SplitMix64 finalizer (Steele, Lea & Flood).
constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Counter-based SplitMix64 stream: the index-th draw for a seed.  Used for
// every randomized input in the library so runs are reproducible from
// (seed, index) alone.
constexpr uint64_t splitmix64_at(uint64_t seed, uint64_t index) {
    return mix64(seed + (index + 1) * kSplitMixGamma);
}

// Small sequential wrapper over the counter-based stream.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : seed_(seed) {}
    uint64_t next() { return splitmix64_at(seed_, counter_++); }
    // Uniform value in [0, bound) by rejection-free modulo; bound > 0.
    uint64_t next_below(uint64_t bound) { return next() % bound; }
    int64_t next_in(int64_t lo, int64_t hi) {  // inclusive range
        return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo + 1)));
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

}  // namespace polyvdw
