#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gca/error.hpp"
#include "gca/rational.hpp"
#include "gca/vars.hpp"

namespace gca {

using Exp = std::vector<int>;

// Sparse multivariate polynomial over Q. Terms are kept in a map
// ordered lexicographically on exponent vectors (declared variable
// order); no zero coefficient is ever stored.
class MPoly {
public:
    using TermMap = std::map<Exp, Rat>;

    MPoly() = default;
    explicit MPoly(VarsPtr vars) : vars_(std::move(vars)) {}

    static MPoly constant(VarsPtr vars, const Rat& c) {
        MPoly p(vars);
        if (c != 0) p.terms_.emplace(Exp(p.arity(), 0), c);
        return p;
    }

    static MPoly variable(VarsPtr vars, int idx, int exp = 1) {
        MPoly p(vars);
        if (idx < 0 || idx >= p.arity()) throw InvalidInput("variable index out of range");
        if (exp < 0) throw InvalidInput("negative exponent in polynomial");
        Exp e(p.arity(), 0);
        e[idx] = exp;
        p.terms_.emplace(std::move(e), Rat(1));
        return p;
    }

    static MPoly variable(VarsPtr vars, const std::string& name, int exp = 1) {
        return variable(vars, vars->index_of(name), exp);
    }

    static MPoly monomial(VarsPtr vars, Exp e, const Rat& c) {
        MPoly p(vars);
        if (static_cast<int>(e.size()) != p.arity())
            throw InvalidInput("monomial exponent arity mismatch");
        for (int v : e)
            if (v < 0) throw InvalidInput("negative exponent in polynomial");
        if (c != 0) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const VarsPtr& vars() const { return vars_; }
    int arity() const { return vars_ ? vars_->arity() : 0; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const Exp& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    }

    Rat constant_value() const {
        if (is_zero()) return Rat(0);
        if (!is_constant()) throw Error("constant_value on nonconstant polynomial");
        return terms_.begin()->second;
    }

    bool is_one() const { return is_constant() && constant_value() == 1; }

    bool is_monomial() const { return terms_.size() == 1; }

    // Constant term (coefficient of the all-zero exponent).
    Rat constant_term() const {
        if (terms_.empty()) return Rat(0);
        Exp zero(arity(), 0);
        auto it = terms_.find(zero);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
        return d;
    }

    bool uses_var(int var) const {
        for (const auto& [e, c] : terms_)
            if (e[var] > 0) return true;
        return false;
    }

    std::vector<int> used_vars() const {
        std::vector<int> out;
        for (int v = 0; v < arity(); ++v)
            if (uses_var(v)) out.push_back(v);
        return out;
    }

    // Leading term under lex over the declared variable order.
    const std::pair<const Exp, Rat>& leading_term() const {
        if (is_zero()) throw Error("leading_term of zero polynomial");
        return *terms_.rbegin();
    }

    MPoly operator-() const {
        MPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_same_vars(b);
        MPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exp e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend MPoly operator*(const MPoly& a, const Rat& c) {
        MPoly r(a.vars_);
        if (c == 0) return r;
        r.terms_ = a.terms_;
        for (auto& [e, v] : r.terms_) v *= c;
        return r;
    }

    friend MPoly operator*(const Rat& c, const MPoly& a) { return a * c; }

    MPoly pow(int e) const {
        if (e < 0) throw InvalidInput("negative power of a polynomial");
        MPoly acc = constant(vars_, 1);
        MPoly b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            if ((e >>= 1)) b = b * b;
        }
        return acc;
    }

    bool operator==(const MPoly& o) const {
        return vars_same(o) && terms_ == o.terms_;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Full evaluation; the assignment vector is indexed like the table.
    Rat eval(const std::vector<Rat>& assign) const {
        if (static_cast<int>(assign.size()) != arity())
            throw InvalidInput("eval: assignment arity mismatch");
        Rat acc(0);
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= rat_pow(assign[i], e[i]);
            acc += t;
        }
        return acc;
    }

    // Substitute a single variable by a rational.
    MPoly subst(int var, const Rat& value) const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Exp e2(e);
            Rat c2 = c;
            if (e2[var] != 0) {
                c2 *= rat_pow(value, e2[var]);
                e2[var] = 0;
            }
            r.add_term(e2, c2);
        }
        return r;
    }

    MPoly derivative(int var) const {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exp e2(e);
            Rat c2 = c * e2[var];
            e2[var] -= 1;
            r.add_term(e2, c2);
        }
        return r;
    }

    // Re-express over another table; every used variable must exist
    // there under the same name.
    MPoly map_vars(const VarsPtr& target) const {
        MPoly r(target);
        std::vector<int> where(arity(), -1);
        for (int v = 0; v < arity(); ++v) {
            auto idx = target->find(vars_->name(v));
            if (uses_var(v) && !idx)
                throw InvalidInput("map_vars: target table lacks variable " + vars_->name(v));
            where[v] = idx ? *idx : -1;
        }
        for (const auto& [e, c] : terms_) {
            Exp e2(target->arity(), 0);
            for (int v = 0; v < arity(); ++v)
                if (e[v] != 0) e2[where[v]] = e[v];
            r.add_term(e2, c);
        }
        return r;
    }

    // Content: gcd of the coefficients, with the sign of the leading
    // coefficient. content(0) = 0.
    Rat content() const {
        if (is_zero()) return Rat(0);
        Int num_gcd(0), den_lcm(1);
        for (const auto& [e, c] : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat cont(num_gcd, den_lcm);
        cont.canonicalize();
        if (sgn(leading_term().second) < 0) cont = -cont;
        return cont;
    }

    // this / content(): integer coefficients, gcd 1, positive leading
    // coefficient. Zero maps to zero.
    MPoly primitive_part() const {
        if (is_zero()) return *this;
        return *this * (1 / content());
    }

    // Exact division; nullopt when not divisible.
    std::optional<MPoly> exact_div(const MPoly& d) const {
        check_same_vars(d);
        if (d.is_zero()) throw InvalidInput("division by zero polynomial");
        MPoly rem = *this;
        MPoly quot(vars_);
        const auto& [de, dc] = d.leading_term();
        while (!rem.is_zero()) {
            const auto& [re, rc] = rem.leading_term();
            Exp qe(re);
            bool divisible = true;
            for (size_t i = 0; i < qe.size(); ++i) {
                qe[i] -= de[i];
                if (qe[i] < 0) {
                    divisible = false;
                    break;
                }
            }
            if (!divisible) return std::nullopt;
            Rat qc = rc / dc;
            MPoly m = monomial(vars_, qe, qc);
            quot += m;
            rem -= m * d;
        }
        return quot;
    }

    bool divides_into(const MPoly& numerator) const {
        return numerator.exact_div(*this).has_value();
    }

    // Dense coefficient list in a single variable; every other variable
    // must be absent.
    std::vector<Rat> univariate_in(int var) const {
        for (int v = 0; v < arity(); ++v)
            if (v != var && uses_var(v))
                throw InvalidInput("univariate_in: polynomial uses variable " + vars_->name(v));
        std::vector<Rat> coef(static_cast<size_t>(degree_in(var)) + 1, Rat(0));
        for (const auto& [e, c] : terms_) coef[e[var]] = c;
        if (is_zero()) coef.assign(1, Rat(0));
        return coef;
    }

    static MPoly from_univariate(VarsPtr vars, int var, const std::vector<Rat>& coef) {
        MPoly p(vars);
        for (size_t i = 0; i < coef.size(); ++i) {
            if (coef[i] == 0) continue;
            Exp e(p.arity(), 0);
            e[var] = static_cast<int>(i);
            p.add_term(e, coef[i]);
        }
        return p;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print highest lex term first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rat a = c;
            if (first) {
                if (sgn(a) < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (sgn(a) < 0 ? " - " : " + ");
                if (sgn(a) < 0) a = -a;
            }
            first = false;
            bool has_vars = std::any_of(e.begin(), e.end(), [](int v) { return v > 0; });
            if (a != 1 || !has_vars) os << rat_to_string(a);
            bool star = (a != 1 || !has_vars);
            for (int v = 0; v < arity(); ++v) {
                if (e[v] == 0) continue;
                if (star) os << "*";
                os << vars_->name(v);
                if (e[v] > 1) os << "^" << e[v];
                star = true;
            }
        }
        return os.str();
    }

private:
    void add_term(const Exp& e, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool vars_same(const MPoly& o) const {
        if (vars_ == o.vars_) return true;
        if (!vars_ || !o.vars_) return false;
        return vars_->names() == o.vars_->names();
    }

    void check_same_vars(const MPoly& o) const {
        if (!vars_same(o)) throw InvalidInput("polynomials over different variable tables");
    }

    VarsPtr vars_;
    TermMap terms_;
};

namespace detail {

// Minimal recursive-descent parser for polynomial expressions:
// rationals, declared variable names, + - * ^ and parentheses.
class PolyParser {
public:
    PolyParser(std::string src, VarsPtr vars) : src_(std::move(src)), vars_(std::move(vars)) {}

    MPoly parse() {
        MPoly r = parse_sum();
        skip_ws();
        if (pos_ != src_.size())
            throw InvalidInput("unexpected character '" + std::string(1, src_[pos_]) +
                               "' at offset " + std::to_string(pos_) + " in '" + src_ + "'");
        return r;
    }

private:
    MPoly parse_sum() {
        MPoly acc = parse_product();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc += parse_product();
            } else if (peek() == '-') {
                ++pos_;
                acc -= parse_product();
            } else {
                return acc;
            }
        }
    }

    MPoly parse_product() {
        MPoly acc = parse_power();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_power();
            } else {
                return acc;
            }
        }
    }

    MPoly parse_power() {
        MPoly base = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (start == pos_) throw InvalidInput("expected integer exponent in '" + src_ + "'");
            int e = std::stoi(src_.substr(start, pos_ - start));
            return base.pow(e);
        }
        return base;
    }

    MPoly parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly inner = parse_sum();
            skip_ws();
            if (peek() != ')') throw InvalidInput("missing ')' in '" + src_ + "'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (peek() == '/') {
                size_t save = pos_;
                ++pos_;
                size_t dstart = pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
                if (dstart == pos_) {
                    pos_ = save;
                }
            }
            return MPoly::constant(vars_, rat_from_string(src_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return MPoly::variable(vars_, src_.substr(start, pos_ - start));
        }
        throw InvalidInput("unexpected character in polynomial expression '" + src_ + "'");
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    std::string src_;
    VarsPtr vars_;
    size_t pos_ = 0;
};

} // namespace detail

inline MPoly parse_poly(const std::string& expr, const VarsPtr& vars) {
    return detail::PolyParser(expr, vars).parse();
}

} // namespace gca
