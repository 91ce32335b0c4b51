#include "polyvdw/convolution.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "polyvdw/util.hpp"

namespace polyvdw {

namespace {

constexpr size_t kDirectOutputLimit = size_t{1} << 18;
constexpr uint64_t kFloatMassLimit = uint64_t{1} << 53;

uint64_t mass_of(const std::vector<uint64_t>& v) {
    uint128 m = 0;
    for (uint64_t x : v) m += x;
    if (m > UINT64_MAX) throw std::overflow_error("convolve: input mass exceeds 64 bits");
    return static_cast<uint64_t>(m);
}

std::vector<uint64_t> convolve_direct(const std::vector<uint64_t>& a,
                                      const std::vector<uint64_t>& b) {
    std::vector<uint64_t> out(a.size() + b.size() - 1, 0);
    std::vector<uint32_t> nzA, nzB;
    for (uint32_t i = 0; i < a.size(); ++i)
        if (a[i]) nzA.push_back(i);
    for (uint32_t i = 0; i < b.size(); ++i)
        if (b[i]) nzB.push_back(i);
    for (uint32_t i : nzA)
        for (uint32_t j : nzB) out[i + j] += a[i] * b[j];
    return out;
}

// ---- floating-point FFT ------------------------------------------------

void fft_inplace(std::vector<std::complex<double>>& a, bool invert) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2 * std::numbers::pi / static_cast<double>(len) * (invert ? -1 : 1);
        const size_t half = len >> 1;
        std::vector<std::complex<double>> roots(half);
        for (size_t j = 0; j < half; ++j)
            roots[j] = std::polar(1.0, ang * static_cast<double>(j));
        for (size_t i = 0; i < n; i += len) {
            for (size_t j = 0; j < half; ++j) {
                std::complex<double> u = a[i + j];
                std::complex<double> v = a[i + j + half] * roots[j];
                a[i + j] = u + v;
                a[i + j + half] = u - v;
            }
        }
    }
    if (invert) {
        for (auto& x : a) x /= static_cast<double>(n);
    }
}

std::vector<uint64_t> convolve_fft_rounded(const std::vector<uint64_t>& a,
                                           const std::vector<uint64_t>& b) {
    const size_t outLen = a.size() + b.size() - 1;
    size_t fftLen = 1;
    while (fftLen < outLen) fftLen <<= 1;
    std::vector<std::complex<double>> fa(fftLen), fb;
    for (size_t i = 0; i < a.size(); ++i) fa[i] = static_cast<double>(a[i]);
    fft_inplace(fa, false);
    if (&a == &b) {
        for (auto& x : fa) x *= x;
    } else {
        fb.assign(fftLen, {});
        for (size_t i = 0; i < b.size(); ++i) fb[i] = static_cast<double>(b[i]);
        fft_inplace(fb, false);
        for (size_t i = 0; i < fftLen; ++i) fa[i] *= fb[i];
    }
    fft_inplace(fa, true);
    std::vector<uint64_t> out(outLen);
    for (size_t i = 0; i < outLen; ++i) {
        double re = fa[i].real();
        double rounded = std::round(re);
        if (rounded < 0 || std::abs(re - rounded) > 0.25)
            throw std::runtime_error("convolve: FFT result too noisy to round");
        out[i] = static_cast<uint64_t>(rounded);
    }
    return out;
}

// ---- exact modular check ------------------------------------------------

// 31-bit primes p = c * 2^k + 1 with 2-adic order at least 2^24.
struct NttPrime {
    uint64_t p;
    uint64_t g;  // primitive root
};

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
    uint64_t acc = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = static_cast<uint64_t>(static_cast<uint128>(acc) * base % mod);
        base = static_cast<uint64_t>(static_cast<uint128>(base) * base % mod);
        exp >>= 1;
    }
    return acc;
}

uint64_t find_primitive_root(uint64_t p) {
    uint64_t phi = p - 1;
    std::vector<uint64_t> factors;
    uint64_t m = phi;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) factors.push_back(m);
    for (uint64_t g = 2;; ++g) {
        bool ok = true;
        for (uint64_t q : factors)
            if (pow_mod(g, phi / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

const std::vector<NttPrime>& ntt_primes() {
    static const std::vector<NttPrime> primes = [] {
        std::vector<NttPrime> out;
        for (uint64_t p : {2013265921ull, 1811939329ull, 2113929217ull, 2130706433ull})
            out.push_back({p, find_primitive_root(p)});
        return out;
    }();
    return primes;
}

void ntt_inplace(std::vector<uint64_t>& a, const NttPrime& prime, bool invert) {
    const size_t n = a.size();
    const uint64_t p = prime.p;
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        uint64_t w = pow_mod(prime.g, (p - 1) / len, p);
        if (invert) w = pow_mod(w, p - 2, p);
        for (size_t i = 0; i < n; i += len) {
            uint64_t wj = 1;
            for (size_t j = 0; j < len / 2; ++j) {
                uint64_t u = a[i + j];
                uint64_t v = static_cast<uint64_t>(static_cast<uint128>(a[i + j + len / 2]) * wj % p);
                a[i + j] = u + v < p ? u + v : u + v - p;
                a[i + j + len / 2] = u >= v ? u - v : u + p - v;
                wj = static_cast<uint64_t>(static_cast<uint128>(wj) * w % p);
            }
        }
    }
    if (invert) {
        uint64_t nInv = pow_mod(n % p, p - 2, p);
        for (auto& x : a) x = static_cast<uint64_t>(static_cast<uint128>(x) * nInv % p);
    }
}

std::vector<uint64_t> convolve_mod(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                                   const NttPrime& prime) {
    const size_t outLen = a.size() + b.size() - 1;
    size_t nttLen = 1;
    while (nttLen < outLen) nttLen <<= 1;
    std::vector<uint64_t> fa(nttLen, 0), fb;
    for (size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % prime.p;
    ntt_inplace(fa, prime, false);
    if (&a == &b) {
        for (auto& x : fa) x = static_cast<uint64_t>(static_cast<uint128>(x) * x % prime.p);
    } else {
        fb.assign(nttLen, 0);
        for (size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % prime.p;
        ntt_inplace(fb, prime, false);
        for (size_t i = 0; i < nttLen; ++i)
            fa[i] = static_cast<uint64_t>(static_cast<uint128>(fa[i]) * fb[i] % prime.p);
    }
    ntt_inplace(fa, prime, true);
    fa.resize(outLen);
    return fa;
}

const NttPrime& pick_check_prime(size_t nttLen) {
    static std::atomic<uint64_t> counter{0};
    const auto& primes = ntt_primes();
    std::vector<const NttPrime*> usable;
    for (const auto& prime : primes)
        if ((prime.p - 1) % nttLen == 0) usable.push_back(&prime);
    if (usable.empty()) throw std::overflow_error("convolve: transform too long for the check primes");
    uint64_t idx = splitmix64_at(0x706f6c79766477ull, counter.fetch_add(1)) % usable.size();
    return *usable[idx];
}

}  // namespace

std::vector<uint64_t> convolve_exact(const std::vector<uint64_t>& a,
                                     const std::vector<uint64_t>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("convolve: empty input");
    const uint64_t massA = mass_of(a), massB = mass_of(b);
    if (massB != 0 && massA > UINT64_MAX / massB)
        throw std::overflow_error("convolve: output mass exceeds 64 bits");
    const uint64_t outMass = massA * massB;

    const size_t outLen = a.size() + b.size() - 1;
    std::vector<uint64_t> out;
    if (outLen <= kDirectOutputLimit) {
        out = convolve_direct(a, b);
    } else {
        if (outMass > kFloatMassLimit)
            throw std::overflow_error("convolve: mass too large for verified FFT convolution");
        out = convolve_fft_rounded(a, b);
        size_t nttLen = 1;
        while (nttLen < outLen) nttLen <<= 1;
        const NttPrime& prime = pick_check_prime(nttLen);
        std::vector<uint64_t> check = convolve_mod(a, b, prime);
        for (size_t i = 0; i < outLen; ++i)
            if (out[i] % prime.p != check[i])
                throw std::runtime_error("convolve: FFT result failed the modular residue check");
    }
    if (mass_of(out) != outMass)
        throw std::runtime_error("convolve: total-mass identity violated");
    return out;
}

}  // namespace polyvdw
