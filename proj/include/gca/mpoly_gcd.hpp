#pragma once

#include <algorithm>
#include <vector>

#include "gca/mpoly.hpp"

namespace gca {

namespace detail {

// Dense view of p as a univariate polynomial in `var` whose
// coefficients are MPoly over the same table (not using `var`).
inline std::vector<MPoly> coeffs_in(const MPoly& p, int var) {
    std::vector<MPoly> out(static_cast<size_t>(p.degree_in(var)) + 1, MPoly(p.vars()));
    for (const auto& [e, c] : p.terms()) {
        Exp e2(e);
        int k = e2[var];
        e2[var] = 0;
        out[k] += MPoly::monomial(p.vars(), e2, c);
    }
    return out;
}

inline MPoly assemble_in(const std::vector<MPoly>& coef, int var, const VarsPtr& vars) {
    MPoly acc(vars);
    MPoly v = MPoly::variable(vars, var);
    for (size_t k = 0; k < coef.size(); ++k)
        acc += coef[k] * v.pow(static_cast<int>(k));
    return acc;
}

inline void trim(std::vector<MPoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Pseudo-remainder of dense univariate polynomials with MPoly
// coefficients: exactly lc(b)^(da-db+1) * a  mod  b, as the
// subresultant divisions require.
inline std::vector<MPoly> pseudo_rem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    trim(a);
    int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    const int delta = da - db;
    const MPoly& lb = b.back();
    int scale_applied = 0;
    while (da >= db && !a.empty()) {
        MPoly top = a[da];
        for (int i = 0; i <= da; ++i) a[i] = a[i] * lb;
        ++scale_applied;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= top * b[i];
        trim(a);
        da = static_cast<int>(a.size()) - 1;
    }
    // Degree can drop by more than one per step; pad the scaling to the
    // canonical lc(b)^(delta+1).
    for (int k = scale_applied; k < delta + 1; ++k)
        for (auto& c : a) c = c * lb;
    return a;
}

} // namespace detail

MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

namespace detail {

// gcd of a list of polynomials (used for contents).
inline MPoly gcd_list(const std::vector<MPoly>& ps, const VarsPtr& vars) {
    MPoly g(vars);
    for (const auto& p : ps) {
        g = mpoly_gcd(g, p);
        if (g.is_one()) return g;
    }
    return g;
}

inline std::vector<MPoly> divide_coeffs(const std::vector<MPoly>& c, const MPoly& d) {
    std::vector<MPoly> out;
    out.reserve(c.size());
    for (const auto& p : c) {
        auto q = p.exact_div(d);
        if (!q) throw ConsistencyError("mpoly_gcd: inexact content division");
        out.push_back(std::move(*q));
    }
    return out;
}

// Subresultant polynomial remainder sequence in `var`; both inputs are
// primitive with respect to `var`. Returns a gcd, primitive in `var`.
inline MPoly prs_gcd(const MPoly& a, const MPoly& b, int var) {
    const VarsPtr& vars = a.vars();
    std::vector<MPoly> A = coeffs_in(a, var);
    std::vector<MPoly> B = coeffs_in(b, var);
    if (A.size() < B.size()) std::swap(A, B);

    MPoly g = MPoly::constant(vars, 1);
    MPoly h = MPoly::constant(vars, 1);
    for (;;) {
        int delta = static_cast<int>(A.size()) - static_cast<int>(B.size());
        std::vector<MPoly> R = pseudo_rem(A, B);
        if (R.empty()) break;
        if (R.size() == 1) return MPoly::constant(vars, 1); // constant remainder: coprime in var
        MPoly divisor = g * h.pow(delta);
        A = std::move(B);
        B = divide_coeffs(R, divisor);
        g = A.back();
        if (delta == 0) {
            // h unchanged by h^(1-delta) * g^delta = h * 1; actually h = h^{1-0} g^0... keep as is
        } else if (delta == 1) {
            h = g;
        } else {
            auto q = g.pow(delta).exact_div(h.pow(delta - 1));
            if (!q) throw ConsistencyError("mpoly_gcd: subresultant h update failed");
            h = std::move(*q);
        }
    }
    // B holds the gcd up to content in the remaining variables.
    MPoly cand = assemble_in(B, var, vars);
    MPoly cont = gcd_list(coeffs_in(cand, var), vars);
    auto primpart = cand.exact_div(cont);
    if (!primpart) throw ConsistencyError("mpoly_gcd: primitive part division failed");
    return *primpart;
}

} // namespace detail

// Greatest common divisor, normalized to be primitive over the
// integers with positive leading coefficient (lex). gcd(0, b) is the
// normalization of b. Recursive content/primitive-part reduction with
// a subresultant PRS on the chosen main variable.
inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    const VarsPtr& vars = a.vars();
    if (a.is_constant() || b.is_constant()) return MPoly::constant(vars, 1);

    MPoly pa = a.primitive_part();
    MPoly pb = b.primitive_part();
    if (pa == pb) return pa;

    // Main variable: used by both, smallest combined degree.
    int var = -1;
    long best = 0;
    for (int v = 0; v < a.arity(); ++v) {
        if (!pa.uses_var(v) || !pb.uses_var(v)) continue;
        long score = static_cast<long>(pa.degree_in(v)) + pb.degree_in(v);
        if (var < 0 || score < best) {
            var = v;
            best = score;
        }
    }
    if (var < 0) return MPoly::constant(vars, 1); // no common variable

    MPoly ca = detail::gcd_list(detail::coeffs_in(pa, var), vars);
    MPoly cb = detail::gcd_list(detail::coeffs_in(pb, var), vars);
    auto qa = pa.exact_div(ca);
    auto qb = pb.exact_div(cb);
    if (!qa || !qb) throw ConsistencyError("mpoly_gcd: content division failed");

    MPoly g = detail::prs_gcd(*qa, *qb, var) * mpoly_gcd(ca, cb);
    g = g.primitive_part();
    if (!g.divides_into(a) || !g.divides_into(b))
        throw ConsistencyError("mpoly_gcd: candidate does not divide inputs");
    return g;
}

} // namespace gca
