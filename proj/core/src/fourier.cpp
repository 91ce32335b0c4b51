#include "polyvdw/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyvdw {

namespace {

constexpr int64_t kMaxGridSize = int64_t{1} << 26;
constexpr double kRoundingTolerance = 1e-6;
constexpr double kChainTolerance = 1e-9;

// e^(2 pi i r / M) for r in [0, M)
std::vector<std::complex<double>> unit_roots(int64_t gridSize) {
    std::vector<std::complex<double>> roots(static_cast<size_t>(gridSize));
    for (int64_t r = 0; r < gridSize; ++r)
        roots[static_cast<size_t>(r)] =
            std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(gridSize));
    return roots;
}

// Frequencies reduced mod M once; theta_j * v is then evaluated through the
// residue (j * (v mod M)) mod M, exactly in integers.
std::vector<int64_t> residues_mod(std::span<const int64_t> values, int64_t gridSize) {
    std::vector<int64_t> residue(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        int64_t r = values[i] % gridSize;
        if (r < 0) r += gridSize;
        residue[i] = r;
    }
    return residue;
}

FourierGrid sample_sum_of_phases(std::span<const int64_t> frequencies, int64_t gridSize) {
    if (gridSize < 1) throw std::invalid_argument("fourier grid: need M >= 1");
    if (gridSize > kMaxGridSize) throw std::invalid_argument("fourier grid: M too large");
    FourierGrid grid;
    grid.gridSize = gridSize;
    grid.values.assign(static_cast<size_t>(gridSize), {0.0, 0.0});
    if (frequencies.empty()) {
        grid.freqLo = grid.freqHi = 0;
        return grid;
    }
    auto [loIt, hiIt] = std::minmax_element(frequencies.begin(), frequencies.end());
    grid.freqLo = *loIt;
    grid.freqHi = *hiIt;
    std::vector<std::complex<double>> roots = unit_roots(gridSize);
    std::vector<int64_t> residue = residues_mod(frequencies, gridSize);
    for (int64_t j = 0; j < gridSize; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (int64_t r : residue) acc += roots[static_cast<size_t>(j * r % gridSize)];
        grid.values[static_cast<size_t>(j)] = acc;
    }
    return grid;
}

uint64_t round_checked(long double re, long double im, const char* what) {
    long double rounded = std::round(re);
    long double tolerance = kRoundingTolerance * (std::abs(rounded) + 1);
    if (rounded < 0 || std::abs(im) > tolerance || std::abs(re - rounded) > tolerance)
        throw std::runtime_error(std::string(what) +
                                 ": grid too small or numeric failure (re=" + std::to_string(static_cast<double>(re)) +
                                 ", im=" + std::to_string(static_cast<double>(im)) + ")");
    return static_cast<uint64_t>(rounded);
}

}  // namespace

std::complex<double> FourierGrid::average() const {
    long double re = 0, im = 0;
    for (const auto& v : values) {
        re += v.real();
        im += v.imag();
    }
    return {static_cast<double>(re / static_cast<long double>(gridSize)),
            static_cast<double>(im / static_cast<long double>(gridSize))};
}

FourierGrid sample_set_transform(std::span<const int64_t> sortedSet, int64_t gridSize) {
    return sample_sum_of_phases(sortedSet, gridSize);
}

FourierGrid sample_phase_sum(const IntPolynomial& f, int64_t n, int64_t gridSize) {
    if (n < 1) throw std::invalid_argument("sample_phase_sum: need n >= 1");
    std::vector<int64_t> values(static_cast<size_t>(n));
    for (int64_t y = 1; y <= n; ++y) values[static_cast<size_t>(y - 1)] = f(y);
    return sample_sum_of_phases(values, gridSize);
}

uint64_t pair_integral(std::span<const int64_t> sortedSet, const IntPolynomial& f, int64_t n) {
    if (n < 1) throw std::invalid_argument("pair_integral: need n >= 1");
    if (sortedSet.empty()) return 0;
    int64_t spanA = checked_sub(sortedSet.back(), sortedSet.front());
    int64_t fLo = f(1), fHi = f(1);
    for (int64_t y = 2; y <= n; ++y) {
        int64_t v = f(y);
        fLo = std::min(fLo, v);
        fHi = std::max(fHi, v);
    }
    // Integrand frequencies are x - z + f(y), spanning 2*spanA + spanF inside
    // [fLo - spanA, fHi + spanA].  The grid aliases exactly the nonzero
    // frequencies divisible by M, so M must also exceed the largest magnitude.
    int64_t span = checked_add(checked_mul(2, spanA), checked_sub(fHi, fLo));
    int64_t maxAbs = std::max(checked_abs(checked_add(spanA, fHi)),
                              checked_abs(checked_sub(fLo, spanA)));
    int64_t gridSize = checked_add(std::max(span, maxAbs), 1);
    FourierGrid setGrid = sample_set_transform(sortedSet, gridSize);
    FourierGrid phaseGrid = sample_phase_sum(f, n, gridSize);
    long double re = 0, im = 0;
    for (int64_t j = 0; j < gridSize; ++j) {
        long double mag2 = static_cast<long double>(std::norm(setGrid.values[static_cast<size_t>(j)]));
        std::complex<double> fv = phaseGrid.values[static_cast<size_t>(j)];
        re += mag2 * fv.real();
        im += mag2 * fv.imag();
    }
    re /= static_cast<long double>(gridSize);
    im /= static_cast<long double>(gridSize);
    return round_checked(re, im, "pair_integral");
}

uint128 moment_integral(const CountingQuery& query) {
    if (query.s < 2 || query.s % 2 != 0)
        throw std::invalid_argument("moment_integral: s must be even and >= 2");
    int64_t fLo = query.f(1), fHi = query.f(1);
    for (int64_t y = 2; y <= query.n; ++y) {
        int64_t v = query.f(y);
        fLo = std::min(fLo, v);
        fHi = std::max(fHi, v);
    }
    int64_t gridSize =
        checked_add(checked_mul(query.s, checked_sub(fHi, fLo)), 1);
    FourierGrid phaseGrid = sample_phase_sum(query.f, query.n, gridSize);
    long double acc = 0;
    for (const auto& v : phaseGrid.values) {
        long double mag2 = static_cast<long double>(std::norm(v));
        long double term = 1;
        for (int i = 0; i < query.s / 2; ++i) term *= mag2;
        acc += term;
    }
    acc /= static_cast<long double>(gridSize);
    return static_cast<uint128>(round_checked(acc, 0.0, "moment_integral"));
}

HolderChainReport holder_chain_report(std::span<const int64_t> sortedSet, const IntPolynomial& f,
                                      int64_t n, int s) {
    if (sortedSet.empty()) throw std::invalid_argument("holder_chain_report: empty set");
    if (n < 1) throw std::invalid_argument("holder_chain_report: need n >= 1");
    if (s < 2 || s % 2 != 0)
        throw std::invalid_argument("holder_chain_report: s must be even and >= 2");

    int64_t spanA = checked_sub(sortedSet.back(), sortedSet.front());
    int64_t fLo = f(1), fHi = f(1);
    for (int64_t y = 2; y <= n; ++y) {
        int64_t v = f(y);
        fLo = std::min(fLo, v);
        fHi = std::max(fHi, v);
    }
    int64_t spanF = checked_sub(fHi, fLo);
    // One shared grid covering every integrand; 8x oversampled because the
    // fractional-power integrand is not a trigonometric polynomial.  The
    // pair integrand x - z + f(y) is not symmetric around 0, so its largest
    // frequency magnitude matters alongside the spans.
    int64_t pairMaxAbs = std::max(checked_abs(checked_add(spanA, fHi)),
                                  checked_abs(checked_sub(fLo, spanA)));
    int64_t largestSpan = std::max({checked_add(checked_mul(2, spanA), spanF),
                                    checked_mul(static_cast<int64_t>(s), spanF),
                                    checked_mul(2, spanA), pairMaxAbs});
    int64_t gridSize = checked_add(checked_mul(8, largestSpan), 1);
    FourierGrid setGrid = sample_set_transform(sortedSet, gridSize);
    FourierGrid phaseGrid = sample_phase_sum(f, n, gridSize);

    const double sd = static_cast<double>(s);
    long double lhsRe = 0, lhsIm = 0, fracAcc = 0, parsevalAcc = 0, momentAcc = 0;
    for (int64_t j = 0; j < gridSize; ++j) {
        long double setMag2 = static_cast<long double>(std::norm(setGrid.values[static_cast<size_t>(j)]));
        std::complex<double> fv = phaseGrid.values[static_cast<size_t>(j)];
        lhsRe += setMag2 * fv.real();
        lhsIm += setMag2 * fv.imag();
        parsevalAcc += setMag2;
        fracAcc += std::pow(static_cast<double>(setMag2), sd / (sd - 1.0));
        long double fMag2 = static_cast<long double>(std::norm(fv));
        long double term = 1;
        for (int i = 0; i < s / 2; ++i) term *= fMag2;
        momentAcc += term;
    }
    const long double m = static_cast<long double>(gridSize);

    HolderChainReport report;
    report.gridSize = gridSize;
    report.lhs = static_cast<double>(lhsRe / m);
    report.setTransformIntegral = static_cast<double>(parsevalAcc / m);
    report.momentIntegral = static_cast<double>(momentAcc / m);
    const double setSize = static_cast<double>(sortedSet.size());
    const double fracIntegral = static_cast<double>(fracAcc / m);
    report.holderBound =
        std::pow(fracIntegral, 1.0 - 1.0 / sd) * std::pow(report.momentIntegral, 1.0 / sd);
    report.supBound = std::pow(std::pow(setSize, 2.0 / (sd - 1.0)) * report.setTransformIntegral,
                               1.0 - 1.0 / sd) *
                      std::pow(report.momentIntegral, 1.0 / sd);
    report.parsevalForm = std::pow(std::pow(setSize, (sd + 1.0) / (sd - 1.0)), 1.0 - 1.0 / sd) *
                          std::pow(report.momentIntegral, 1.0 / sd);

    auto slack = [](double v) { return kChainTolerance * (std::abs(v) + 1.0); };
    if (std::abs(static_cast<double>(lhsIm / m)) > slack(report.lhs))
        throw std::runtime_error("holder_chain_report: imaginary residue in the pair integral");
    if (report.lhs > report.holderBound + slack(report.holderBound))
        throw std::runtime_error("holder_chain_report: Holder step violated");
    if (report.holderBound > report.supBound + slack(report.supBound))
        throw std::runtime_error("holder_chain_report: sup-bound step violated");
    if (std::abs(report.supBound - report.parsevalForm) > slack(report.parsevalForm))
        throw std::runtime_error("holder_chain_report: Parseval step violated");
    report.verdict = true;
    return report;
}

}  // namespace polyvdw
