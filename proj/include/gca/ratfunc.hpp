#pragma once

#include "gca/mpoly.hpp"
#include "gca/mpoly_gcd.hpp"

namespace gca {

// Rational function num/den over Q. Equality is cross-multiplication;
// no automatic canonical form is maintained, call reduce() to divide
// out the gcd (mutations do, to keep intermediate sizes down).
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw InvalidInput("RatFunc: zero denominator");
    }

    static RatFunc from_poly(MPoly p) {
        MPoly one = MPoly::constant(p.vars(), 1);
        return RatFunc(std::move(p), std::move(one));
    }

    static RatFunc constant(const VarsPtr& vars, const Rat& c) {
        return RatFunc(MPoly::constant(vars, c), MPoly::constant(vars, 1));
    }

    static RatFunc variable(const VarsPtr& vars, const std::string& name) {
        return from_poly(MPoly::variable(vars, name));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VarsPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc inv() const {
        if (num_.is_zero()) throw InvalidInput("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    RatFunc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc acc = constant(vars(), 1);
        RatFunc b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            if ((e >>= 1)) b = b * b;
        }
        return acc;
    }

    // a/b == c/d  iff  a*d == c*b.
    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    bool is_one() const {
        return !num_.is_zero() && num_ == den_;
    }

    // Divide out gcd(num, den) and normalize the denominator to be
    // primitive with positive leading coefficient. The result is the
    // canonical representative. Monomial parts are cancelled first so
    // the polynomial gcd only sees the interesting factors.
    RatFunc reduced() const {
        if (num_.is_zero()) {
            return RatFunc(MPoly(vars()), MPoly::constant(vars(), 1));
        }
        MPoly n = num_, d = den_;
        Exp shift = monomial_gcd(n, d);
        if (std::any_of(shift.begin(), shift.end(), [](int v) { return v > 0; })) {
            n = *n.exact_div(MPoly::monomial(n.vars(), shift, Rat(1)));
            d = *d.exact_div(MPoly::monomial(d.vars(), shift, Rat(1)));
        }
        if (!d.is_monomial()) {
            MPoly g = mpoly_gcd(n, d);
            if (!g.is_one()) {
                n = *n.exact_div(g);
                d = *d.exact_div(g);
            }
        }
        Rat dc = d.content();
        n = n * (1 / dc);
        d = d * (1 / dc);
        return RatFunc(std::move(n), std::move(d));
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    // Componentwise minimum exponent common to both polynomials.
    static Exp monomial_gcd(const MPoly& a, const MPoly& b) {
        Exp m(a.arity(), 0);
        bool first = true;
        auto scan = [&](const MPoly& p) {
            for (const auto& [e, c] : p.terms()) {
                for (int v = 0; v < p.arity(); ++v)
                    m[v] = first ? e[v] : std::min(m[v], e[v]);
                first = false;
            }
        };
        scan(a);
        scan(b);
        return m;
    }

    MPoly num_, den_;
};

} // namespace gca
