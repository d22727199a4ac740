#pragma once

#include <vector>

#include "gca/seed.hpp"

namespace gca {

// Integer tropical data attached to a trajectory: C-matrices, tropical
// signs and G-matrices, each cross-checked against an independent
// characterization.
struct TropicalData {
    std::vector<IMat> C;       // per seed, C[0] = I
    std::vector<IMat> G;       // per seed, G[0] = I
    std::vector<int> eps;      // per mutation step, +1 / -1
    SymmetrizerData symmetrizer;
};

// C-matrices by the recursion, cross-checked against the
// tropicalization of the y-variables (which must not involve the
// z-generators). The i-th column of C[t] is the c-vector of y_i[t].
inline std::vector<IMat> c_matrices(const MutationTrajectory& traj) {
    const int n = traj.initial().n;
    const VarsPtr& coef = traj.initial().coef_vars;
    std::vector<IMat> C;
    C.push_back(imat_identity(n));
    for (int t = 0; t < traj.length(); ++t) {
        const GCASeed& seed = traj.seeds[t];
        const int k = traj.ks[t];
        const long long dk = seed.d[k];
        IMat next(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (j == k)
                    next[i][j] = -C[t][i][k];
                else
                    next[i][j] = C[t][i][j] +
                                 dk * (positive_part(-C[t][i][k]) * seed.B[k][j] +
                                       C[t][i][k] * positive_part(seed.B[k][j]));
            }
        C.push_back(std::move(next));
    }

    for (size_t t = 0; t < traj.seeds.size(); ++t) {
        for (int i = 0; i < n; ++i) {
            TropElem trop = tropicalize(traj.seeds[t].y[i]);
            for (int v = 0; v < coef->arity(); ++v) {
                long long expect = v < n ? C[t][v][i] : 0;
                if (trop.exps[v] != expect)
                    throw ConsistencyError(
                        "c_matrices: recursion and tropicalization disagree at t=" +
                        std::to_string(t + 1) + ", i=" + std::to_string(i + 1));
            }
        }
    }
    return C;
}

inline bool column_sign_coherent(const IMat& C, int col, int* sign_out) {
    int sign = 0;
    for (size_t i = 0; i < C.size(); ++i) {
        long long v = C[i][col];
        if (v == 0) continue;
        int s = v > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    if (sign == 0) return false; // zero c-vector: also forbidden
    *sign_out = sign;
    return true;
}

// Tropical signs eps_t = sign of the mutated column c_{k_t}[t]. A
// mixed-sign or zero column would falsify sign coherence and raises.
inline std::vector<int> tropical_signs(const MutationTrajectory& traj,
                                       const std::vector<IMat>& C) {
    const int n = traj.initial().n;
    for (size_t t = 0; t < C.size(); ++t)
        for (int i = 0; i < n; ++i) {
            int s;
            if (!column_sign_coherent(C[t], i, &s))
                throw ConsistencyError("sign coherence fails at t=" + std::to_string(t + 1) +
                                       ", column " + std::to_string(i + 1));
        }
    std::vector<int> eps;
    for (int t = 0; t < traj.length(); ++t) {
        int s;
        column_sign_coherent(C[t], traj.ks[t], &s);
        eps.push_back(s);
    }
    return eps;
}

// G-matrices: G[1] = I and the columns mutate by the linear maps
// rho_t, i.e.  g'_{k_t} = -g_{k_t} + d_{k_t} sum_j [-eps_t b_{j k_t}]_+ g_j.
// The duality R^{-1} G[t]^T R C[t] = I is asserted at every step; it is
// what pins the row/column convention.
inline std::vector<IMat> g_matrices(const MutationTrajectory& traj,
                                    const std::vector<IMat>& C,
                                    const std::vector<int>& eps,
                                    const SymmetrizerData& sym) {
    const int n = traj.initial().n;
    std::vector<IMat> G;
    G.push_back(imat_identity(n));
    for (int t = 0; t < traj.length(); ++t) {
        const GCASeed& seed = traj.seeds[t];
        const int k = traj.ks[t];
        const long long dk = seed.d[k];
        IMat E = imat_identity(n);
        for (int j = 0; j < n; ++j)
            E[j][k] = (j == k ? -1 : 0) + dk * positive_part(-eps[t] * seed.B[j][k]);
        G.push_back(imat_mul(G[t], E));
    }

    for (size_t t = 0; t < G.size(); ++t) {
        // R^{-1} G^T R C = I  <=>  G^T R C = R.
        IMat GT = imat_transpose(G[t]);
        IMat RC(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) RC[i][j] = sym.r[i] * C[t][i][j];
        IMat M = imat_mul(GT, RC);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (M[i][j] != (i == j ? sym.r[i] : 0))
                    throw ConsistencyError("C/G duality fails at t=" + std::to_string(t + 1));
    }
    return G;
}

inline TropicalData tropical_data(const MutationTrajectory& traj,
                                  const std::optional<std::vector<long long>>& r_override =
                                      std::nullopt) {
    TropicalData td;
    td.symmetrizer = skew_symmetrizer(traj.initial().B);
    if (r_override) {
        const IMat& B = traj.initial().B;
        const int n = traj.initial().n;
        if (static_cast<int>(r_override->size()) != n)
            throw InvalidInput("symmetrizer override has wrong length");
        for (int i = 0; i < n; ++i) {
            if ((*r_override)[i] <= 0) throw InvalidInput("symmetrizer entries must be positive");
            for (int j = 0; j < n; ++j)
                if ((*r_override)[i] * B[i][j] != -(*r_override)[j] * B[j][i])
                    throw InvalidInput("provided r is not a skew-symmetrizer");
        }
        td.symmetrizer.r = *r_override;
        long long l = 1;
        for (long long ri : td.symmetrizer.r) l = std::lcm(l, ri);
        td.symmetrizer.r_lcm = l;
        td.symmetrizer.r_tilde.assign(n, 1);
        for (int i = 0; i < n; ++i) td.symmetrizer.r_tilde[i] = l / td.symmetrizer.r[i];
    }
    td.C = c_matrices(traj);
    td.eps = tropical_signs(traj, td.C);
    td.G = g_matrices(traj, td.C, td.eps, td.symmetrizer);
    return td;
}

} // namespace gca
