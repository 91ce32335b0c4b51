#include "polyvdw/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace polyvdw {

namespace {

constexpr int kMaxPower = 4096;

void strip_trailing_zeros(std::vector<int64_t>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

struct Scanner {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int64_t integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        int64_t value = 0;
        auto res = std::from_chars(text.data() + start, text.data() + pos, value);
        if (res.ec != std::errc() || res.ptr != text.data() + pos || start == pos)
            throw std::invalid_argument("polynomial parse: bad integer in '" + std::string(text) + "'");
        return value;
    }
};

// term := [sign] ( INT [ '*'? 'y' [ '^' INT ] ] | 'y' [ '^' INT ] )
IntPolynomial parse_monomial_sum(std::string_view text) {
    Scanner sc{text};
    std::vector<int64_t> coeffs;
    bool first = true;
    while (!sc.done()) {
        int64_t sign = 1;
        if (sc.consume('+')) {
            sign = 1;
        } else if (sc.consume('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("polynomial parse: expected '+' or '-' in '" + std::string(text) + "'");
        }
        first = false;

        int64_t coefficient = 1;
        bool sawCoefficient = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            coefficient = sc.integer();
            sawCoefficient = true;
        }
        int power = 0;
        bool sawStar = sc.consume('*');
        if (sc.peek() == 'y') {
            sc.consume('y');
            power = 1;
            if (sc.consume('^')) {
                int64_t p = sc.integer();
                if (p < 0 || p > kMaxPower)
                    throw std::invalid_argument("polynomial parse: unsupported exponent in '" + std::string(text) + "'");
                power = static_cast<int>(p);
            }
        } else {
            if (sawStar || !sawCoefficient)
                throw std::invalid_argument("polynomial parse: expected term in '" + std::string(text) + "'");
        }
        if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, 0);
        coeffs[power] = checked_add(coeffs[power], checked_mul(sign, coefficient));
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial parse_coefficient_list(std::string_view text) {
    std::vector<int64_t> coeffs;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        Scanner sc{piece};
        coeffs.push_back(sc.integer());
        if (!sc.done())
            throw std::invalid_argument("polynomial parse: trailing junk in '" + std::string(text) + "'");
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

IntPolynomial IntPolynomial::monomial(int64_t coefficient, int power) {
    if (power < 0 || power > kMaxPower) throw std::invalid_argument("monomial: unsupported power");
    std::vector<int64_t> coeffs(power + 1, 0);
    coeffs[power] = coefficient;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    if (begin == std::string_view::npos)
        throw std::invalid_argument("polynomial parse: empty spec");
    if (text.find('y') != std::string_view::npos) return parse_monomial_sum(text);
    return parse_coefficient_list(text);
}

int64_t IntPolynomial::operator()(int64_t y) const {
    int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = checked_add(checked_mul(acc, y), *it);
    return acc;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<int64_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = checked_sub(coeff(static_cast<int>(i)), rhs.coeff(static_cast<int>(i)));
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int p = degree(); p >= 0; --p) {
        int64_t c = coeffs_[p];
        if (c == 0) continue;
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
        } else if (c < 0) {
            out += "-";
        }
        uint64_t mag = c < 0 ? -static_cast<uint64_t>(c) : static_cast<uint64_t>(c);
        if (p == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += p == 1 ? "y" : "y^" + std::to_string(p);
        }
    }
    return out;
}

int max_pairwise_difference_degree(std::span<const IntPolynomial> polys) {
    if (polys.size() < 2)
        throw std::invalid_argument("max_pairwise_difference_degree: need at least two polynomials");
    int best = -1;
    for (size_t i = 0; i < polys.size(); ++i) {
        for (size_t j = i + 1; j < polys.size(); ++j) {
            if (polys[i] == polys[j])
                throw std::invalid_argument("max_pairwise_difference_degree: duplicate polynomial " +
                                            polys[i].to_string());
            best = std::max(best, (polys[i] - polys[j]).degree());
        }
    }
    return best;
}

}  // namespace polyvdw
