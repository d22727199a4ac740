#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gca/matrix.hpp"
#include "gca/ratfunc.hpp"
#include "gca/semifield.hpp"

namespace gca {

// One z-coefficient in a seed specification: either a named generator
// of the universal semifield or a positive rational constant.
using ZEntry = std::variant<std::string, Rat>;

// The algebraic part of a seed configuration.
struct SeedSpec {
    int rank = 0;
    std::vector<int> d;                          // mutation degree, d[i] >= 1
    IMat B;
    std::optional<std::vector<long long>> r;     // optional symmetrizer override
    std::vector<std::vector<ZEntry>> z_interior; // per i: entries for s = 1..d[i]-1
    std::vector<int> ks;                         // 1-based mutation sequence
    std::optional<std::vector<int>> sigma;       // 1-based permutation, if known
};

// Generalized seed (B, x, y, z). x-variables live in the rational
// function field over (x, y, z); y- and z-variables in the universal
// semifield Q+(y,z). z[i] always has z[i][0] = z[i][d_i] = 1.
struct GCASeed {
    int n = 0;
    std::vector<int> d;
    IMat B;
    std::vector<RatFunc> x; // empty when x-variables are not tracked
    std::vector<SfElem> y;
    std::vector<std::vector<SfElem>> z;
    VarsPtr coef_vars; // y1..yn, z symbols
    VarsPtr full_vars; // x1..xn, y1..yn, z symbols
};

namespace detail {

// z-coefficients are generators or positive constants, so their
// stored denominator is a constant; fold it into the numerator.
inline MPoly z_coeff_poly(const SfElem& z) {
    if (!z.den().is_constant())
        throw ConsistencyError("z-coefficient is not polynomial");
    return z.num() * (1 / z.den().constant_value());
}

// Divide factors (with multiplicities) out of num as often as they go;
// the product of the survivors is returned as the leftover denominator.
inline MPoly cancel_factors(MPoly& num, std::vector<std::pair<MPoly, int>> factors,
                            const VarsPtr& vars) {
    MPoly leftover = MPoly::constant(vars, 1);
    for (auto& [f, mult] : factors) {
        if (f.is_constant()) {
            leftover = leftover * rat_pow(f.constant_value(), mult);
            continue;
        }
        while (mult > 0) {
            auto q = num.exact_div(f);
            if (!q) break;
            num = std::move(*q);
            --mult;
        }
        if (mult > 0) leftover *= f.pow(mult);
    }
    return leftover;
}

} // namespace detail

// The exchange polynomial P_{d_k, z_k}(y_k), with the semifield sum
// evaluated as ordinary + (the coefficient semifield is universal).
// With y_k = p/q this is  (sum_s z_s p^s q^{d-s}) / q^d,  assembled
// over the single common denominator.
inline SfElem exchange_poly_sf(const GCASeed& s, int k) {
    const int dk = s.d[k];
    const MPoly& p = s.y[k].num();
    const MPoly& q = s.y[k].den();
    std::vector<MPoly> ppow{MPoly::constant(p.vars(), 1)};
    std::vector<MPoly> qpow{MPoly::constant(p.vars(), 1)};
    for (int i = 1; i <= dk; ++i) {
        ppow.push_back(ppow.back() * p);
        qpow.push_back(qpow.back() * q);
    }
    MPoly num(p.vars());
    for (int sdeg = 0; sdeg <= dk; ++sdeg)
        num += detail::z_coeff_poly(s.z[k][sdeg]) * ppow[sdeg] * qpow[dk - sdeg];
    return SfElem(std::move(num), qpow[dk]);
}

inline std::vector<RatFunc> yhat_vars(const GCASeed& s) {
    if (s.x.empty()) throw InvalidInput("yhat_vars: seed does not carry x-variables");
    std::vector<RatFunc> out;
    out.reserve(s.n);
    for (int i = 0; i < s.n; ++i) {
        RatFunc v = s.y[i].as_ratfunc(s.full_vars);
        for (int j = 0; j < s.n; ++j)
            if (s.B[j][i] != 0) v = v * s.x[j].pow(s.B[j][i]);
        out.push_back(std::move(v));
    }
    return out;
}

namespace detail {

// x-mutation assembled over a single common denominator, with the
// denominator kept as a factor list so cancellation is trial division
// against known small factors instead of one huge gcd:
//
//   x'_k = x_k^{-1} (prod_j x_j^{[-b_jk]+})^{d_k} P(yhat_k) / P(y_k)|_P
//
// with yhat_k = A/B and P(yhat_k) = (sum_s z_s A^s B^{d-s}) / B^d.
inline RatFunc mutate_x_at(const GCASeed& s, int k, const SfElem& p_y) {
    const VarsPtr& fv = s.full_vars;
    const int dk = s.d[k];

    const MPoly yn = s.y[k].num().map_vars(fv);
    const MPoly yd = s.y[k].den().map_vars(fv);

    MPoly A = yn, B = yd;
    std::vector<std::pair<MPoly, int>> bfac{{yd, 1}};
    for (int j = 0; j < s.n; ++j) {
        long long b = s.B[j][k];
        if (b > 0) {
            A *= s.x[j].num().pow(static_cast<int>(b));
            B *= s.x[j].den().pow(static_cast<int>(b));
            bfac.emplace_back(s.x[j].den(), static_cast<int>(b));
        } else if (b < 0) {
            A *= s.x[j].den().pow(static_cast<int>(-b));
            B *= s.x[j].num().pow(static_cast<int>(-b));
            bfac.emplace_back(s.x[j].num(), static_cast<int>(-b));
        }
    }

    std::vector<MPoly> apow{MPoly::constant(fv, 1)};
    std::vector<MPoly> bpow{MPoly::constant(fv, 1)};
    for (int i = 1; i <= dk; ++i) {
        apow.push_back(apow.back() * A);
        bpow.push_back(bpow.back() * B);
    }
    MPoly np(fv);
    for (int sdeg = 0; sdeg <= dk; ++sdeg)
        np += z_coeff_poly(s.z[k][sdeg]).map_vars(fv) * apow[sdeg] * bpow[dk - sdeg];

    MPoly num = np * s.x[k].den();
    std::vector<std::pair<MPoly, int>> den_factors{{s.x[k].num(), 1}};
    for (int j = 0; j < s.n; ++j) {
        long long nb = -s.B[j][k];
        if (nb > 0) {
            num *= s.x[j].num().pow(static_cast<int>(nb * dk));
            den_factors.emplace_back(s.x[j].den(), static_cast<int>(nb * dk));
        }
    }
    num *= p_y.den().map_vars(fv);
    den_factors.emplace_back(p_y.num().map_vars(fv), 1);
    for (const auto& [f, mult] : bfac) den_factors.emplace_back(f, mult * dk);

    MPoly den = cancel_factors(num, std::move(den_factors), fv);
    return RatFunc(std::move(num), std::move(den)).reduced();
}

} // namespace detail

// Mutation at direction k (0-based).
inline GCASeed mutate_seed(const GCASeed& s, int k) {
    if (k < 0 || k >= s.n) throw InvalidInput("mutate_seed: index out of range");
    GCASeed t;
    t.n = s.n;
    t.d = s.d;
    t.coef_vars = s.coef_vars;
    t.full_vars = s.full_vars;
    const int dk = s.d[k];

    t.B.assign(s.n, std::vector<long long>(s.n, 0));
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            if (i == k || j == k)
                t.B[i][j] = -s.B[i][j];
            else
                t.B[i][j] = s.B[i][j] +
                            dk * (positive_part(-s.B[i][k]) * s.B[k][j] +
                                  s.B[i][k] * positive_part(s.B[k][j]));
        }

    const SfElem p_y = exchange_poly_sf(s, k);
    t.y.reserve(s.n);
    for (int i = 0; i < s.n; ++i) {
        if (i == k) {
            t.y.push_back(s.y[k].inv());
        } else {
            SfElem v = s.y[i] * s.y[k].pow(positive_part(s.B[k][i]) * dk) *
                       p_y.pow(-s.B[k][i]);
            t.y.push_back(v.reduced_if_positive());
        }
    }

    t.z = s.z;
    std::reverse(t.z[k].begin(), t.z[k].end());

    if (!s.x.empty()) {
        t.x = s.x;
        t.x[k] = detail::mutate_x_at(s, k, p_y);
    }
    return t;
}

struct MutationTrajectory {
    std::vector<GCASeed> seeds; // m+1 seeds
    std::vector<int> ks;        // m mutation directions, 0-based

    int length() const { return static_cast<int>(ks.size()); }
    const GCASeed& initial() const { return seeds.front(); }
    const GCASeed& final() const { return seeds.back(); }
};

inline MutationTrajectory run_sequence(const GCASeed& s, const std::vector<int>& ks) {
    MutationTrajectory traj;
    traj.seeds.push_back(s);
    traj.ks = ks;
    for (int k : ks) traj.seeds.push_back(mutate_seed(traj.seeds.back(), k));
    return traj;
}

// Build the initial seed from a spec. Generators are named x1..xn and
// y1..yn; z symbols keep their configured names.
inline GCASeed make_initial_seed(const SeedSpec& spec, bool with_x = true) {
    const int n = spec.rank;
    if (n <= 0) throw InvalidInput("seed: rank must be positive");
    if (static_cast<int>(spec.d.size()) != n) throw InvalidInput("seed: d has wrong length");
    for (int di : spec.d)
        if (di < 1) throw InvalidInput("seed: mutation degrees must be positive");
    if (static_cast<int>(spec.B.size()) != n || !imat_square(spec.B))
        throw InvalidInput("seed: B must be a square matrix of the given rank");
    if (static_cast<int>(spec.z_interior.size()) != n)
        throw InvalidInput("seed: z-spec has wrong length");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(spec.z_interior[i].size()) != spec.d[i] - 1)
            throw InvalidInput("seed: z-spec row " + std::to_string(i + 1) +
                               " must have d_i - 1 interior entries");
    skew_symmetrizer(spec.B); // validates

    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    for (const auto& row : spec.z_interior)
        for (const auto& e : row)
            if (std::holds_alternative<std::string>(e)) {
                const std::string& sym = std::get<std::string>(e);
                if (std::find(names.begin(), names.end(), sym) == names.end()) {
                    if (sym.size() >= 2 && (sym[0] == 'x' || sym[0] == 'y'))
                        throw InvalidInput("seed: z symbol '" + sym + "' clashes with reserved names");
                    names.push_back(sym);
                }
            }
    VarsPtr coef = make_vars(names);
    std::vector<std::string> full_names;
    for (int i = 1; i <= n; ++i) full_names.push_back("x" + std::to_string(i));
    full_names.insert(full_names.end(), names.begin(), names.end());
    VarsPtr full = make_vars(full_names);

    GCASeed s;
    s.n = n;
    s.d = spec.d;
    s.B = spec.B;
    s.coef_vars = coef;
    s.full_vars = full;
    for (int i = 1; i <= n; ++i) s.y.push_back(SfElem::generator(coef, "y" + std::to_string(i)));
    s.z.resize(n);
    for (int i = 0; i < n; ++i) {
        s.z[i].push_back(SfElem::one(coef));
        for (const auto& e : spec.z_interior[i]) {
            if (std::holds_alternative<std::string>(e))
                s.z[i].push_back(SfElem::generator(coef, std::get<std::string>(e)));
            else
                s.z[i].push_back(SfElem::constant(coef, std::get<Rat>(e)));
        }
        s.z[i].push_back(SfElem::one(coef));
    }
    if (with_x)
        for (int i = 1; i <= n; ++i)
            s.x.push_back(RatFunc::variable(full, "x" + std::to_string(i)));
    return s;
}

inline MutationTrajectory run_spec(const SeedSpec& spec, bool with_x = true) {
    std::vector<int> ks0;
    for (int k : spec.ks) {
        if (k < 1 || k > spec.rank) throw InvalidInput("mutation index out of range");
        ks0.push_back(k - 1);
    }
    return run_sequence(make_initial_seed(spec, with_x), ks0);
}

struct PeriodReport {
    bool periodic = false;
    std::optional<std::vector<int>> sigma; // 0-based; present when periodic or when given
    bool b_matches = false;
    bool x_matches = false;
    bool y_matches = false;
    bool symmetrizer_consistent = false;   // r_{sigma(i)} == r_i
    std::vector<std::string> z_relation;   // per i: "same" / "reversed" / "other"
};

namespace detail {

inline bool perm_b_matches(const GCASeed& a, const GCASeed& b, const std::vector<int>& sg) {
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (b.B[sg[i]][sg[j]] != a.B[i][j]) return false;
    return true;
}

inline bool perm_y_matches(const GCASeed& a, const GCASeed& b, const std::vector<int>& sg) {
    for (int i = 0; i < a.n; ++i)
        if (!sf_eq(b.y[sg[i]], a.y[i])) return false;
    return true;
}

inline bool perm_x_matches(const GCASeed& a, const GCASeed& b, const std::vector<int>& sg) {
    if (a.x.empty() || b.x.empty()) return true; // x not tracked
    for (int i = 0; i < a.n; ++i)
        if (b.x[sg[i]] != a.x[i]) return false;
    return true;
}

} // namespace detail

// Checks sigma-periodicity of a trajectory: B, x and y must return to
// their initial values up to the permutation. When sigma is absent the
// permutations of {1..n} are scanned in lexicographic order (n <= 8)
// and the first full match is reported. z-variables are not part of
// the periodicity definition; their relation to the initial tuple is
// reported informationally.
inline PeriodReport check_sigma_period(const MutationTrajectory& traj,
                                       const std::optional<std::vector<int>>& sigma = std::nullopt) {
    const GCASeed& first = traj.initial();
    const GCASeed& last = traj.final();
    const int n = first.n;
    PeriodReport rep;

    auto evaluate = [&](const std::vector<int>& sg) {
        rep.b_matches = detail::perm_b_matches(first, last, sg);
        rep.y_matches = rep.b_matches && detail::perm_y_matches(first, last, sg);
        rep.x_matches = rep.y_matches && detail::perm_x_matches(first, last, sg);
        return rep.b_matches && rep.y_matches && rep.x_matches;
    };

    if (sigma) {
        if (static_cast<int>(sigma->size()) != n)
            throw InvalidInput("check_sigma_period: permutation has wrong length");
        rep.sigma = sigma;
        rep.periodic = evaluate(*sigma);
    } else {
        if (n > 8) throw InvalidInput("check_sigma_period: permutation search needs rank <= 8");
        std::vector<int> sg(n);
        for (int i = 0; i < n; ++i) sg[i] = i;
        do {
            if (evaluate(sg)) {
                rep.periodic = true;
                rep.sigma = sg;
                break;
            }
        } while (std::next_permutation(sg.begin(), sg.end()));
        if (!rep.periodic) {
            // Leave the identity's per-condition results for reporting.
            std::vector<int> id(n);
            for (int i = 0; i < n; ++i) id[i] = i;
            evaluate(id);
        }
    }

    const std::vector<int>& sg = rep.sigma ? *rep.sigma
                                           : [&] {
                                                 std::vector<int> id(n);
                                                 for (int i = 0; i < n; ++i) id[i] = i;
                                                 return id;
                                             }();

    if (rep.periodic) {
        SymmetrizerData sym = skew_symmetrizer(first.B);
        rep.symmetrizer_consistent = true;
        for (int i = 0; i < n; ++i)
            if (sym.r[sg[i]] != sym.r[i]) rep.symmetrizer_consistent = false;
        if (!rep.symmetrizer_consistent)
            throw ConsistencyError("periodic trajectory with r_{sigma(i)} != r_i");
    }

    rep.z_relation.assign(n, "other");
    for (int i = 0; i < n; ++i) {
        if (first.d[i] != last.d[sg[i]]) continue;
        const auto& zi = first.z[i];
        const auto& zf = last.z[sg[i]];
        bool same = true, reversed = true;
        for (size_t k = 0; k < zi.size(); ++k) {
            if (!sf_eq(zf[k], zi[k])) same = false;
            if (!sf_eq(zf[zi.size() - 1 - k], zi[k])) reversed = false;
        }
        rep.z_relation[i] = same ? "same" : (reversed ? "reversed" : "other");
    }
    return rep;
}

} // namespace gca
