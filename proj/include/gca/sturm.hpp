#pragma once

#include <vector>

#include "gca/mpoly.hpp"

namespace gca {

namespace detail {

using UPoly = std::vector<Rat>; // dense, index = degree

inline void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    utrim(d);
    return d;
}

// Remainder of a by b over Q.
inline UPoly urem(UPoly a, const UPoly& b) {
    utrim(a);
    while (udeg(a) >= udeg(b)) {
        Rat q = a.back() / b.back();
        int shift = udeg(a) - udeg(b);
        for (int i = 0; i <= udeg(b); ++i) a[shift + i] -= q * b[i];
        utrim(a);
    }
    return a;
}

inline UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline UPoly uquot(UPoly a, const UPoly& b) {
    utrim(a);
    UPoly q(a.size(), Rat(0));
    while (udeg(a) >= udeg(b)) {
        Rat c = a.back() / b.back();
        int shift = udeg(a) - udeg(b);
        q[shift] = c;
        for (int i = 0; i <= udeg(b); ++i) a[shift + i] -= c * b[i];
        utrim(a);
    }
    utrim(q);
    return q;
}

// Sign variations of the chain's values at -infinity / +infinity.
inline int variations_at_inf(const std::vector<UPoly>& chain, bool positive) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sgn(p.back());
        if (!positive && (udeg(p) % 2 == 1)) s = -s;
        if (prev != 0 && s != 0 && s != prev) ++var;
        if (s != 0) prev = s;
    }
    return var;
}

} // namespace detail

// Number of distinct real roots of a nonzero univariate polynomial,
// via a Sturm sequence on its squarefree part.
inline int sturm_real_root_count(const std::vector<Rat>& poly) {
    detail::UPoly p = poly;
    detail::utrim(p);
    if (p.empty()) throw InvalidInput("sturm_real_root_count: zero polynomial");
    if (detail::udeg(p) == 0) return 0;

    detail::UPoly g = detail::ugcd(p, detail::uderiv(p));
    detail::UPoly sq = detail::udeg(g) > 0 ? detail::uquot(p, g) : p;

    std::vector<detail::UPoly> chain;
    chain.push_back(sq);
    chain.push_back(detail::uderiv(sq));
    while (!chain.back().empty() && detail::udeg(chain.back()) > 0) {
        detail::UPoly r = detail::urem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        detail::utrim(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return detail::variations_at_inf(chain, false) - detail::variations_at_inf(chain, true);
}

inline int sturm_real_root_count(const MPoly& p) {
    if (p.is_zero()) throw InvalidInput("sturm_real_root_count: zero polynomial");
    auto used = p.used_vars();
    if (used.empty()) return 0;
    if (used.size() > 1) throw InvalidInput("sturm_real_root_count: polynomial is not univariate");
    return sturm_real_root_count(p.univariate_in(used[0]));
}

} // namespace gca
