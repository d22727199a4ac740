#pragma once

#include <memory>
#include <vector>

#include "gca/coprime.hpp"
#include "gca/fpoly.hpp"
#include "gca/semifield.hpp"

namespace gca {

// Multiplicative factor context for wedge computations: a coprime basis
// of polynomial factors plus the integer primes occurring in constant
// factors. Every element that will be wedged must be gathered before
// the context is built, so that its factorization stays inside the
// basis.
class WedgeContext {
public:
    static std::shared_ptr<const WedgeContext> build(const std::vector<SfElem>& elems) {
        auto ctx = std::make_shared<WedgeContext>();
        std::vector<MPoly> polys;
        for (const auto& e : elems) {
            polys.push_back(e.num());
            polys.push_back(e.den());
        }
        CoprimeBasis cb = coprime_basis(polys);
        ctx->basis_ = std::move(cb.basis);
        ctx->primes_ = std::move(cb.primes);
        return ctx;
    }

    int size() const { return static_cast<int>(basis_.size() + primes_.size()); }
    const std::vector<MPoly>& basis() const { return basis_; }
    const std::vector<Int>& primes() const { return primes_; }

    // Exponent vector of f over [basis..., primes...].
    std::vector<long long> exponents(const SfElem& f) const {
        std::vector<long long> row(size(), 0);
        accumulate(f.num(), +1, row);
        accumulate(f.den(), -1, row);
        return row;
    }

private:
    void accumulate(const MPoly& p, int sign, std::vector<long long>& row) const {
        Rat c = p.content();
        if (sgn(c) <= 0) throw ConsistencyError("WedgeContext: nonpositive constant factor");
        MPoly rem = p.primitive_part();
        for (size_t j = 0; j < basis_.size(); ++j) {
            for (;;) {
                auto q = rem.exact_div(basis_[j]);
                if (!q) break;
                rem = std::move(*q);
                row[j] += sign;
            }
        }
        if (!rem.is_one())
            throw ConsistencyError("WedgeContext: element does not factor over the basis");
        auto add_primes = [&](const Int& v, int s) {
            for (const auto& [prime, e] : factor_positive_int(v)) {
                auto it = std::lower_bound(primes_.begin(), primes_.end(), prime);
                if (it == primes_.end() || *it != prime)
                    throw ConsistencyError("WedgeContext: unregistered prime factor");
                row[basis_.size() + (it - primes_.begin())] += s * e;
            }
        };
        add_primes(c.get_num(), sign);
        add_primes(c.get_den(), -sign);
    }

    std::vector<MPoly> basis_;
    std::vector<Int> primes_; // sorted
};

// Integer combination  sum a_uv (basis_u tensor basis_v)  in the tensor
// square of the multiplicative group generated by the context.
class TensorSquareElem {
public:
    explicit TensorSquareElem(std::shared_ptr<const WedgeContext> ctx)
        : ctx_(std::move(ctx)),
          a_(ctx_->size(), std::vector<long long>(ctx_->size(), 0)) {}

    const std::shared_ptr<const WedgeContext>& ctx() const { return ctx_; }
    const std::vector<std::vector<long long>>& matrix() const { return a_; }

    void add_tensor(long long weight, const SfElem& f, const SfElem& g) {
        std::vector<long long> fe = ctx_->exponents(f);
        std::vector<long long> ge = ctx_->exponents(g);
        const int nn = ctx_->size();
        for (int u = 0; u < nn; ++u) {
            if (fe[u] == 0) continue;
            for (int v = 0; v < nn; ++v)
                if (ge[v] != 0) a_[u][v] += weight * fe[u] * ge[v];
        }
    }

    TensorSquareElem& operator+=(const TensorSquareElem& o) {
        check_ctx(o);
        for (size_t u = 0; u < a_.size(); ++u)
            for (size_t v = 0; v < a_.size(); ++v) a_[u][v] += o.a_[u][v];
        return *this;
    }

    TensorSquareElem& operator-=(const TensorSquareElem& o) {
        check_ctx(o);
        for (size_t u = 0; u < a_.size(); ++u)
            for (size_t v = 0; v < a_.size(); ++v) a_[u][v] -= o.a_[u][v];
        return *this;
    }

    friend TensorSquareElem operator+(TensorSquareElem a, const TensorSquareElem& b) { return a += b; }
    friend TensorSquareElem operator-(TensorSquareElem a, const TensorSquareElem& b) { return a -= b; }

    bool operator==(const TensorSquareElem& o) const { return ctx_ == o.ctx_ && a_ == o.a_; }

private:
    void check_ctx(const TensorSquareElem& o) const {
        if (ctx_ != o.ctx_) throw InvalidInput("TensorSquareElem: mixed contexts");
    }

    std::shared_ptr<const WedgeContext> ctx_;
    std::vector<std::vector<long long>> a_;
};

struct WedgeTerm {
    long long weight;
    SfElem f, g;
};

inline TensorSquareElem wedge_sum(const std::shared_ptr<const WedgeContext>& ctx,
                                  const std::vector<WedgeTerm>& terms) {
    TensorSquareElem e(ctx);
    for (const auto& t : terms) e.add_tensor(t.weight, t.f, t.g);
    return e;
}

// Zero test in the exterior square: the class of the element vanishes
// iff the coefficient matrix is symmetric off the diagonal (diagonal
// entries are killed by the x^x = 0 relations).
inline bool is_zero_in_wedge(const TensorSquareElem& e) {
    const auto& a = e.matrix();
    for (size_t u = 0; u < a.size(); ++u)
        for (size_t v = u + 1; v < a.size(); ++v)
            if (a[u][v] != a[v][u]) return false;
    return true;
}

// Constancy condition of a periodic trajectory:
//   sum_t rtilde_{k_t} ( y_{k_t}[t] wedge P_{d,z_{k_t}[t]}(y_{k_t}[t]) ) = 0.
inline bool verify_constancy(const MutationTrajectory& traj, const SymmetrizerData& sym) {
    std::vector<SfElem> gathered;
    std::vector<std::pair<SfElem, SfElem>> pairs;
    for (int t = 0; t < traj.length(); ++t) {
        const GCASeed& seed = traj.seeds[t];
        int k = traj.ks[t];
        SfElem yk = seed.y[k];
        SfElem pk = exchange_poly_sf(seed, k);
        gathered.push_back(yk);
        gathered.push_back(pk);
        pairs.emplace_back(std::move(yk), std::move(pk));
    }
    auto ctx = WedgeContext::build(gathered);
    TensorSquareElem acc(ctx);
    for (int t = 0; t < traj.length(); ++t)
        acc.add_tensor(sym.r_tilde[traj.ks[t]], pairs[t].first, pairs[t].second);
    return is_zero_in_wedge(acc);
}

struct VSequenceReport {
    std::vector<TensorSquareElem> V;   // V[t] per seed slot
    bool v_first_zero = false;
    bool v_final_zero = false;
    std::vector<bool> step_matches;    // V[t+1]-V[t] == rtilde (y wedge P)
    bool telescoping_ok = false;       // all of the above step checks
};

// The element V[t] attached to each seed and the step-by-step
// verification of the lemma  V[t+1] - V[t] = rtilde_{k_t} (y wedge P).
inline VSequenceReport v_sequence(const MutationTrajectory& traj, const FPolyTable& F,
                                  const SymmetrizerData& sym) {
    const int n = traj.initial().n;
    std::vector<SfElem> gathered;
    for (size_t t = 0; t < traj.seeds.size(); ++t) {
        for (int i = 0; i < n; ++i) {
            gathered.push_back(traj.seeds[t].y[i]);
            gathered.push_back(SfElem::from_poly(F[t][i]));
        }
    }
    for (int t = 0; t < traj.length(); ++t)
        gathered.push_back(exchange_poly_sf(traj.seeds[t], traj.ks[t]));
    auto ctx = WedgeContext::build(gathered);

    VSequenceReport rep;
    for (size_t t = 0; t < traj.seeds.size(); ++t) {
        TensorSquareElem V(ctx);
        const GCASeed& seed = traj.seeds[t];
        for (int i = 0; i < n; ++i)
            V.add_tensor(sym.r_tilde[i], SfElem::from_poly(F[t][i]), seed.y[i]);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (seed.B[i][j] != 0)
                    V.add_tensor(seed.B[i][j] * sym.r_tilde[j], SfElem::from_poly(F[t][i]),
                                 SfElem::from_poly(F[t][j]));
        rep.V.push_back(std::move(V));
    }

    rep.v_first_zero = is_zero_in_wedge(rep.V.front());
    rep.v_final_zero = is_zero_in_wedge(rep.V.back());
    rep.telescoping_ok = true;
    for (int t = 0; t < traj.length(); ++t) {
        int k = traj.ks[t];
        TensorSquareElem diff = rep.V[t + 1] - rep.V[t];
        TensorSquareElem step(ctx);
        step.add_tensor(sym.r_tilde[k], traj.seeds[t].y[k],
                        exchange_poly_sf(traj.seeds[t], k));
        diff -= step;
        bool ok = is_zero_in_wedge(diff);
        rep.step_matches.push_back(ok);
        if (!ok) rep.telescoping_ok = false;
    }
    return rep;
}

} // namespace gca
