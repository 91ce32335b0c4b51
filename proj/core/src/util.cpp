#include "polyvdw/util.hpp"

#include <algorithm>

namespace polyvdw {

std::string to_decimal(uint128 value) {
    if (value == 0) return "0";
    std::string out;
    while (value > 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace polyvdw
