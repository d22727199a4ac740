#pragma once

#include <vector>

#include "gca/mpoly.hpp"
#include "gca/ratfunc.hpp"

namespace gca {

// Element of the universal semifield: a ratio of two nonzero
// polynomials whose coefficients are all positive. The representation
// itself is the subtraction-free witness, so no cancellation is ever
// applied; equality is decided by cross-multiplication.
class SfElem {
public:
    SfElem() = default;
    SfElem(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        require_positive(num_);
        require_positive(den_);
    }

    static SfElem one(const VarsPtr& vars) {
        return SfElem(MPoly::constant(vars, 1), MPoly::constant(vars, 1));
    }

    static SfElem constant(const VarsPtr& vars, const Rat& c) {
        if (c <= 0) throw InvalidInput("SfElem: constants must be positive");
        return SfElem(MPoly::constant(vars, c), MPoly::constant(vars, 1));
    }

    static SfElem generator(const VarsPtr& vars, const std::string& name) {
        return SfElem(MPoly::variable(vars, name), MPoly::constant(vars, 1));
    }

    static SfElem from_poly(MPoly p) {
        MPoly one = MPoly::constant(p.vars(), 1);
        return SfElem(std::move(p), std::move(one));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VarsPtr& vars() const { return num_.vars(); }

    SfElem inv() const { return SfElem(den_, num_); }

    friend SfElem operator*(const SfElem& a, const SfElem& b) {
        return SfElem(a.num_ * b.num_, a.den_ * b.den_);
    }

    // Semifield addition: ordinary + of rational functions.
    friend SfElem operator+(const SfElem& a, const SfElem& b) {
        return SfElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    SfElem pow(long e) const {
        if (e < 0) return inv().pow(-e);
        SfElem acc = one(vars());
        SfElem b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            if ((e >>= 1)) b = b * b;
        }
        return acc;
    }

    bool is_one() const { return num_ == den_; }

    // Same element with gcd-reduced parts, kept only when the reduced
    // numerator and denominator are again subtraction-free (for cluster
    // y-variables they always are); otherwise the original witness is
    // returned. Purely a size control: equality is cross-multiplicative
    // and tropicalization is representative-independent.
    SfElem reduced_if_positive() const {
        RatFunc r = RatFunc(num_, den_).reduced();
        auto nonneg = [](const MPoly& p) {
            for (const auto& [e, c] : p.terms())
                if (sgn(c) < 0) return false;
            return true;
        };
        if (!r.num().is_zero() && nonneg(r.num()) && nonneg(r.den()))
            return SfElem(r.num(), r.den());
        return *this;
    }

    RatFunc as_ratfunc() const { return RatFunc(num_, den_); }

    RatFunc as_ratfunc(const VarsPtr& target) const {
        return RatFunc(num_.map_vars(target), den_.map_vars(target));
    }

    std::string to_string() const { return as_ratfunc().to_string(); }

private:
    static void require_positive(const MPoly& p) {
        if (p.is_zero()) throw InvalidInput("SfElem: zero numerator or denominator");
        for (const auto& [e, c] : p.terms())
            if (sgn(c) < 0)
                throw InvalidInput("SfElem: negative coefficient breaks the subtraction-free witness");
    }

    MPoly num_, den_;
};

// a.num*b.den == b.num*a.den as polynomials.
inline bool sf_eq(const SfElem& a, const SfElem& b) {
    return a.num() * b.den() == b.num() * a.den();
}

// Element of the tropical semifield: a Laurent monomial, stored as its
// exponent vector over the generator table. Product adds exponents,
// tropical sum takes the componentwise minimum.
struct TropElem {
    std::vector<long long> exps;

    friend TropElem operator*(const TropElem& a, const TropElem& b) {
        TropElem r = a;
        for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
        return r;
    }

    TropElem inv() const {
        TropElem r = *this;
        for (auto& e : r.exps) e = -e;
        return r;
    }

    // Tropical sum.
    friend TropElem trop_add(const TropElem& a, const TropElem& b) {
        TropElem r = a;
        for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::min(r.exps[i], b.exps[i]);
        return r;
    }

    bool operator==(const TropElem& o) const { return exps == o.exps; }
};

namespace detail {

inline TropElem tropicalize_poly(const MPoly& p) {
    if (p.is_zero()) throw InvalidInput("tropicalize: zero polynomial");
    TropElem t;
    t.exps.assign(p.arity(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (int v = 0; v < p.arity(); ++v) {
            long long x = e[v];
            t.exps[v] = first ? x : std::min(t.exps[v], x);
        }
        first = false;
    }
    return t;
}

} // namespace detail

// The tropicalization homomorphism pi: Q+(y,z) -> Trop(y,z). Monomial
// by monomial, every positive constant maps to 1, so the image of a
// polynomial is the componentwise minimum of its exponent vectors.
inline TropElem tropicalize(const SfElem& f) {
    return detail::tropicalize_poly(f.num()) * detail::tropicalize_poly(f.den()).inv();
}

// Evaluation homomorphism into the positive reals (kept exact as a
// positive rational). Every generator must be assigned a value > 0.
inline Rat eval_phi(const SfElem& f, const std::vector<Rat>& assign) {
    for (const auto& v : assign)
        if (v <= 0) throw InvalidInput("eval_phi: assignments must be strictly positive");
    Rat n = f.num().eval(assign);
    Rat d = f.den().eval(assign);
    return n / d;
}

} // namespace gca
