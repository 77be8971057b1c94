#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "arithlat/errors.hpp"

namespace arithlat {

// All arithmetic in this library is exact. Divisibility and determinant
// tests never touch floating point.
using Int = mpz_class;
using IntVec = std::vector<Int>;

inline Int gcd_all(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline bool all_positive(const IntVec& v) {
    for (const Int& x : v)
        if (x <= 0) return false;
    return true;
}

inline std::string to_decimal(const Int& x) { return x.get_str(); }

inline Int parse_decimal(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw DomainError("not a decimal integer: '" + s + "'");
    }
}

inline long to_long_checked(const Int& x, const char* what) {
    if (!x.fits_slong_p()) throw DomainError(std::string(what) + " out of range");
    return x.get_si();
}

inline IntVec int_vec(std::initializer_list<long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace arithlat
