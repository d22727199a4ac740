#pragma once

#include <optional>
#include <vector>

#include "gca/tropical.hpp"

namespace gca {

// F-polynomials F_i[t](y,z) for a trajectory, computed by the
// recursion. Table is indexed ft[t][i] with t = 0..m (seed slots).
using FPolyTable = std::vector<std::vector<MPoly>>;

// One recursion step divides by F_{k_t}[t]; the division must be exact
// or the polynomiality of the F-polynomials would be falsified.
inline FPolyTable f_polynomials(const MutationTrajectory& traj, const std::vector<IMat>& C) {
    const int n = traj.initial().n;
    const VarsPtr& coef = traj.initial().coef_vars;
    const MPoly one = MPoly::constant(coef, 1);

    FPolyTable ft;
    ft.push_back(std::vector<MPoly>(n, one));
    for (int t = 0; t < traj.length(); ++t) {
        const GCASeed& seed = traj.seeds[t];
        const int k = traj.ks[t];
        const int dk = seed.d[k];
        const std::vector<MPoly>& F = ft[t];

        // Argument of P as a fraction  arg = an/ad  with
        //   an = prod_{c>0} y^c * prod_{b>0} F^b,
        //   ad = prod_{c<0} y^-c * prod_{b<0} F^-b.
        MPoly an = one, ad = one;
        for (int j = 0; j < n; ++j) {
            long long c = C[t][j][k];
            if (c > 0) an *= MPoly::variable(coef, "y" + std::to_string(j + 1), static_cast<int>(c));
            if (c < 0) ad *= MPoly::variable(coef, "y" + std::to_string(j + 1), static_cast<int>(-c));
            long long b = seed.B[j][k];
            if (b > 0) an *= F[j].pow(static_cast<int>(b));
            if (b < 0) ad *= F[j].pow(static_cast<int>(-b));
        }

        // P(arg) = (sum_s z_s an^s ad^(d-s)) / ad^d; z-coefficients are
        // symbols or constants, hence polynomial.
        MPoly psum(coef);
        for (int s = 0; s <= dk; ++s) {
            const SfElem& zs = seed.z[k][s];
            if (!zs.den().is_constant())
                throw ConsistencyError("f_polynomials: z-coefficient is not polynomial");
            MPoly zpoly = zs.num() * (1 / zs.den().constant_value());
            psum += zpoly * an.pow(s) * ad.pow(dk - s);
        }

        MPoly prefactor = one;
        for (int j = 0; j < n; ++j) {
            long long c = C[t][j][k];
            if (c < 0)
                prefactor *= MPoly::variable(coef, "y" + std::to_string(j + 1),
                                             static_cast<int>(-c * dk));
            long long b = seed.B[j][k];
            if (b < 0) prefactor *= F[j].pow(static_cast<int>(-b * dk));
        }

        MPoly numerator = prefactor * psum;
        MPoly denominator = F[k] * ad.pow(dk);
        auto fk = numerator.exact_div(denominator);
        if (!fk)
            throw ConsistencyError("f_polynomials: inexact division at step " +
                                   std::to_string(t + 1));
        std::vector<MPoly> next = F;
        next[k] = std::move(*fk);
        if (next[k].constant_term() != 1)
            throw ConsistencyError("f_polynomials: constant term != 1 at step " +
                                   std::to_string(t + 1));
        ft.push_back(std::move(next));
    }
    return ft;
}

// Separation formula: y_i[t] = prod_j y_j^{c_ji[t]} F_j[t]^{b_ji[t]},
// as exact equality in the rational function field. Returns the first
// offending (t, i) (1-based t) or nullopt when it holds everywhere.
inline std::optional<std::pair<int, int>> check_separation(const MutationTrajectory& traj,
                                                           const std::vector<IMat>& C,
                                                           const FPolyTable& F) {
    const int n = traj.initial().n;
    const VarsPtr& coef = traj.initial().coef_vars;
    for (size_t t = 0; t < traj.seeds.size(); ++t) {
        const GCASeed& seed = traj.seeds[t];
        for (int i = 0; i < n; ++i) {
            RatFunc rhs = RatFunc::constant(coef, 1);
            for (int j = 0; j < n; ++j) {
                long long c = C[t][j][i];
                if (c != 0)
                    rhs = rhs * RatFunc::variable(coef, "y" + std::to_string(j + 1)).pow(c);
                long long b = seed.B[j][i];
                if (b != 0) rhs = rhs * RatFunc::from_poly(F[t][j]).pow(b);
            }
            if (seed.y[i].as_ratfunc() != rhs)
                return std::make_pair(static_cast<int>(t) + 1, i + 1);
        }
    }
    return std::nullopt;
}

// For a sigma-periodic trajectory every F_i[m+1] must equal 1.
inline bool check_f_periodicity(const FPolyTable& F) {
    for (const MPoly& f : F.back())
        if (!f.is_one()) return false;
    return true;
}

} // namespace gca
