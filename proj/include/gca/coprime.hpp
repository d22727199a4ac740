#pragma once

#include <cstdint>
#include <vector>

#include "gca/mpoly.hpp"
#include "gca/mpoly_gcd.hpp"

namespace gca {

// Pairwise-coprime factor basis for a list of nonzero polynomials.
// Every input factors exactly as
//     input[i] = (+ rational constant) * prod_j basis[j]^poly_exps[i][j]
// with the constant further factored into integer primes:
//     constant  = prod_k primes[k]^prime_exps[i][k].
// Inputs with negative leading constant are rejected; everything the
// library feeds in comes from the universal semifield, where constants
// are positive.
struct CoprimeBasis {
    std::vector<MPoly> basis;                          // primitive, positive lead, pairwise coprime
    std::vector<Int> primes;                           // sorted
    std::vector<std::vector<long long>> poly_exps;     // one row per input
    std::vector<std::vector<long long>> prime_exps;    // one row per input
};

inline CoprimeBasis coprime_basis(const std::vector<MPoly>& inputs) {
    CoprimeBasis out;
    if (inputs.empty()) return out;

    std::vector<Rat> constants;
    std::vector<MPoly> prims;
    for (const auto& f : inputs) {
        if (f.is_zero()) throw InvalidInput("coprime_basis: zero polynomial in input");
        Rat c = f.content();
        if (sgn(c) < 0) throw InvalidInput("coprime_basis: negative constant factor");
        constants.push_back(c);
        prims.push_back(f.primitive_part());
    }

    // Refine to a pairwise-coprime set. Replacing a pair {a, b} with
    // {a/g, g, b/g} lowers the total degree, so this terminates.
    std::vector<MPoly> basis;
    for (const auto& p : prims)
        if (!p.is_constant()) basis.push_back(p);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size() && !changed; ++i) {
            for (size_t j = i + 1; j < basis.size() && !changed; ++j) {
                MPoly g = mpoly_gcd(basis[i], basis[j]);
                if (g.is_constant()) continue;
                MPoly qi = *basis[i].exact_div(g);
                MPoly qj = *basis[j].exact_div(g);
                std::vector<MPoly> next;
                for (size_t k = 0; k < basis.size(); ++k)
                    if (k != i && k != j) next.push_back(basis[k]);
                next.push_back(g.primitive_part());
                if (!qi.is_constant()) next.push_back(qi.primitive_part());
                if (!qj.is_constant()) next.push_back(qj.primitive_part());
                basis = std::move(next);
                changed = true;
            }
        }
    }
    // Merge duplicates.
    std::sort(basis.begin(), basis.end(), [](const MPoly& a, const MPoly& b) {
        return a.terms() < b.terms();
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    out.basis = basis;

    // Exponents by repeated exact division; the leftover must be the
    // constant 1 because both sides are primitive with positive lead.
    for (size_t i = 0; i < prims.size(); ++i) {
        std::vector<long long> row(basis.size(), 0);
        MPoly rem = prims[i];
        for (size_t j = 0; j < basis.size(); ++j) {
            for (;;) {
                auto q = rem.exact_div(basis[j]);
                if (!q) break;
                rem = std::move(*q);
                ++row[j];
            }
        }
        if (!rem.is_one())
            throw ConsistencyError("coprime_basis: input does not factor over the basis");
        out.poly_exps.push_back(std::move(row));
    }

    // Factor the rational constants into primes.
    std::map<Int, size_t> prime_index;
    std::vector<std::map<Int, long long>> per_input(constants.size());
    for (size_t i = 0; i < constants.size(); ++i) {
        for (const auto& [p, e] : factor_positive_int(constants[i].get_num()))
            per_input[i][p] += e, prime_index.emplace(p, 0);
        for (const auto& [p, e] : factor_positive_int(constants[i].get_den()))
            per_input[i][p] -= e, prime_index.emplace(p, 0);
    }
    for (auto& [p, idx] : prime_index) {
        idx = out.primes.size();
        out.primes.push_back(p);
    }
    for (size_t i = 0; i < constants.size(); ++i) {
        std::vector<long long> row(out.primes.size(), 0);
        for (const auto& [p, e] : per_input[i])
            if (e != 0) row[prime_index[p]] = e;
        out.prime_exps.push_back(std::move(row));
    }
    return out;
}

} // namespace gca
