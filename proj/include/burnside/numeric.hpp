#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace burnside {

// Exact arithmetic everywhere: marks reach |G|, determinants multiply them,
// and idempotent coefficients are rationals with denominator |N_G(S)|.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int p_part(Int n, unsigned p) {
    if (n == 0)
        return 0;
    if (n < 0)
        n = -n;
    Int q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

inline bool is_prime(unsigned p) {
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace burnside
