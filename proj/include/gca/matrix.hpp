#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "gca/error.hpp"
#include "gca/rational.hpp"

namespace gca {

// Small dense integer matrix, row-major. Ranks here are single digits.
using IMat = std::vector<std::vector<long long>>;

inline IMat imat_identity(int n) {
    IMat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = k ? static_cast<int>(b[0].size()) : 0;
    IMat r(n, std::vector<long long>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            long long s = 0;
            for (int t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    return r;
}

inline IMat imat_transpose(const IMat& a) {
    int n = static_cast<int>(a.size());
    int m = n ? static_cast<int>(a[0].size()) : 0;
    IMat r(m, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

inline bool imat_square(const IMat& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) return false;
    return true;
}

inline long long positive_part(long long a) { return a > 0 ? a : 0; }

// Skew-symmetrizer data: positive integer diagonal R with (RB)^T = -RB,
// minimal per indecomposable block, plus the derived weights
// r_tilde_i = lcm(r)/r_i.
struct SymmetrizerData {
    std::vector<long long> r;
    long long r_lcm = 1;
    std::vector<long long> r_tilde;
};

// Deterministic minimal skew-symmetrizer: propagate the ratio
// r_j = r_i * (-b_ij / b_ji) along edges of the nonzero pattern from
// the lowest index of each block, then clear denominators minimally.
inline SymmetrizerData skew_symmetrizer(const IMat& B) {
    if (!imat_square(B)) throw InvalidInput("skew_symmetrizer: matrix is not square");
    const int n = static_cast<int>(B.size());
    for (int i = 0; i < n; ++i) {
        if (B[i][i] != 0) throw InvalidInput("not skew-symmetrizable");
        for (int j = 0; j < n; ++j) {
            if ((B[i][j] == 0) != (B[j][i] == 0)) throw InvalidInput("not skew-symmetrizable");
            if (B[i][j] != 0 && (B[i][j] > 0) == (B[j][i] > 0))
                throw InvalidInput("not skew-symmetrizable");
        }
    }

    std::vector<Rat> weight(n, Rat(0));
    std::vector<int> block(n, -1);
    int nblocks = 0;
    for (int root = 0; root < n; ++root) {
        if (block[root] >= 0) continue;
        int id = nblocks++;
        block[root] = id;
        weight[root] = 1;
        std::vector<int> queue{root};
        for (size_t q = 0; q < queue.size(); ++q) {
            int i = queue[q];
            for (int j = 0; j < n; ++j) {
                if (B[i][j] == 0) continue;
                Rat w = weight[i] * Rat(static_cast<long>(-B[i][j])) / Rat(static_cast<long>(B[j][i]));
                if (block[j] < 0) {
                    block[j] = id;
                    weight[j] = w;
                    queue.push_back(j);
                } else if (weight[j] != w) {
                    throw InvalidInput("not skew-symmetrizable");
                }
            }
        }
    }

    // Scale each block's rational weights to minimal positive integers.
    SymmetrizerData out;
    out.r.assign(n, 1);
    for (int id = 0; id < nblocks; ++id) {
        Int den_lcm(1), num_gcd(0);
        for (int i = 0; i < n; ++i) {
            if (block[i] != id) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), weight[i].get_den().get_mpz_t());
        }
        std::vector<Int> scaled(n);
        for (int i = 0; i < n; ++i) {
            if (block[i] != id) continue;
            scaled[i] = weight[i].get_num() * (den_lcm / weight[i].get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled[i].get_mpz_t());
        }
        for (int i = 0; i < n; ++i) {
            if (block[i] != id) continue;
            Int v = scaled[i] / num_gcd;
            if (!v.fits_slong_p()) throw InvalidInput("skew-symmetrizer entries too large");
            out.r[i] = v.get_si();
        }
    }

    // Verify (RB)^T = -RB.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (out.r[i] * B[i][j] != -out.r[j] * B[j][i])
                throw InvalidInput("not skew-symmetrizable");

    long long l = 1;
    for (int i = 0; i < n; ++i) l = std::lcm(l, out.r[i]);
    out.r_lcm = l;
    out.r_tilde.assign(n, 1);
    for (int i = 0; i < n; ++i) out.r_tilde[i] = l / out.r[i];
    return out;
}

} // namespace gca
