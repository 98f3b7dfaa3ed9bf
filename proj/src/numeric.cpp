#include "maxcurves/numeric.hpp"

#include <limits>

namespace maxcurves {

bool is_prime(std::uint64_t value) {
    if (value < 2) return false;
    if (value % 2 == 0) return value == 2;
    for (std::uint64_t d = 3; d * d <= value; d += 2) {
        if (value % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t value) {
    std::vector<std::pair<std::uint64_t, int>> factors;
    for (std::uint64_t d = 2; d * d <= value; d += (d == 2 ? 1 : 2)) {
        if (value % d != 0) continue;
        int mult = 0;
        while (value % d == 0) {
            value /= d;
            ++mult;
        }
        factors.emplace_back(d, mult);
    }
    if (value > 1) factors.emplace_back(value, 1);
    return factors;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            throw Error(Errc::TowerTooLarge, "integer power overflows 64 bits");
        }
        result *= base;
    }
    return result;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

}  // namespace maxcurves
