#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyvdw/util.hpp"

namespace polyvdw {

/// Integer-coefficient polynomial in one variable with exact 64-bit
/// arithmetic.  Coefficients are stored low-to-high and normalized so the
/// top stored coefficient is nonzero; the zero polynomial stores nothing
/// and reports degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;  // zero polynomial
    explicit IntPolynomial(std::vector<int64_t> coeffs);

    static IntPolynomial monomial(int64_t coefficient, int power);

    // Accepts a comma-separated coefficient list low-to-high ("0,0,1" is y^2)
    // or a sum of monomials in y ("y^2", "3*y", "y^3-2*y").
    static IntPolynomial parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    int64_t coeff(int power) const {
        return power >= 0 && power < static_cast<int>(coeffs_.size()) ? coeffs_[power] : 0;
    }
    int64_t leading_coeff() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<int64_t>& coeffs() const { return coeffs_; }
    bool vanishes_at_zero() const { return coeff(0) == 0; }

    // Exact evaluation (Horner); throws std::overflow_error instead of wrapping.
    int64_t operator()(int64_t y) const;

    IntPolynomial operator-(const IntPolynomial& rhs) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string to_string() const;

private:
    std::vector<int64_t> coeffs_;  // empty <=> zero polynomial
};

/// max over i<j of deg(p_i - p_j).  Requires at least two polynomials, all
/// pairwise distinct.
int max_pairwise_difference_degree(std::span<const IntPolynomial> polys);

}  // namespace polyvdw
