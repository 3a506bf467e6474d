#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqp {

/// Monomial in the central indeterminates z_1, z_2, ...: the exponent of
/// z_n lives in nibble n-1 of a uint64, so n <= 16 and exponents <= 15.
/// That covers every grade this artifact computes (grade of z_n is 2n and
/// computations stay below grade 32).  The empty monomial (the unit) is 0.
using ZKey = std::uint64_t;

namespace zmon {

inline constexpr int kMaxIndex = 16;

inline constexpr ZKey one() { return 0; }

inline int exponent(ZKey z, int n) {
    return static_cast<int>((z >> (4 * (n - 1))) & 0xf);
}

inline ZKey z(int n, int e = 1) {
    if (n < 1 || n > kMaxIndex || e < 0 || e > 15)
        throw std::domain_error("z-monomial index/exponent out of the supported range");
    return static_cast<ZKey>(e) << (4 * (n - 1));
}

/// Product of monomials = nibble-wise exponent addition.
inline ZKey mul(ZKey a, ZKey b) {
    ZKey s = a + b;
    if (((s ^ a ^ b) & 0x1111111111111110ULL) != 0)
        throw std::overflow_error("z-monomial exponent exceeds the packed range");
    return s;
}

/// grade(z_n) = 2n.
inline int grade(ZKey z) {
    int g = 0;
    for (int n = 1; z != 0; ++n, z >>= 4) g += 2 * n * static_cast<int>(z & 0xf);
    return g;
}

inline std::vector<std::pair<int, int>> exponents(ZKey z) {
    std::vector<std::pair<int, int>> v;
    for (int n = 1; z != 0; ++n, z >>= 4)
        if (int e = static_cast<int>(z & 0xf)) v.emplace_back(n, e);
    return v;
}

inline std::string to_string(ZKey z) {
    if (z == 0) return "1";
    std::string s;
    for (auto [n, e] : exponents(z)) {
        if (!s.empty()) s += ' ';
        s += "z" + std::to_string(n);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace zmon
}  // namespace uqp
