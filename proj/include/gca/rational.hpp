#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gca/error.hpp"

namespace gca {

// Exact arbitrary-precision rational, backed by GMP.
using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(p, q) does not canonicalize; always build ratios through
// this helper.
inline Rat make_rat(long p, long q) {
    if (q == 0) throw InvalidInput("make_rat: zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("cannot parse rational: '" + s + "'");
    }
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

inline int rat_sign(const Rat& r) { return sgn(r); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw InvalidInput("zero raised to a negative power");
        Rat inv = 1 / base;
        return rat_pow(inv, -e);
    }
    Rat acc(1), b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

// Prime factorization by trial division; arguments here are small
// (polynomial contents and user-supplied constants).
inline std::vector<std::pair<Int, int>> factor_positive_int(Int n) {
    if (n <= 0) throw InvalidInput("factor_positive_int: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

} // namespace gca
