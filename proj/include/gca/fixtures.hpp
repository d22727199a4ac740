#pragma once

#include <string>
#include <vector>

#include "gca/seed.hpp"

namespace gca {

// Built-in seed configurations: the interesting small periodic
// mutation sequences of generalized cluster algebras, plus a truncated
// non-periodic variant for negative testing.
//
//   involution    rank 2, d=(2,1), mu_1 twice
//   a2            rank 2, ordinary pentagon, d=(1,1), five steps
//   b2            rank 2, d=(2,1), six alternating steps
//   g2            rank 2, d=(3,1), eight alternating steps
//   b2-truncated  b2 stopped after five steps (not periodic)
inline SeedSpec builtin_spec(const std::string& name) {
    SeedSpec s;
    s.rank = 2;
    s.B = {{0, -1}, {1, 0}};
    if (name == "involution") {
        s.d = {2, 1};
        s.z_interior = {{ZEntry{std::string("a")}}, {}};
        s.ks = {1, 1};
        s.sigma = std::vector<int>{1, 2};
    } else if (name == "a2") {
        s.d = {1, 1};
        s.z_interior = {{}, {}};
        s.ks = {1, 2, 1, 2, 1};
        s.sigma = std::vector<int>{2, 1};
    } else if (name == "b2") {
        s.d = {2, 1};
        s.z_interior = {{ZEntry{std::string("a")}}, {}};
        s.ks = {1, 2, 1, 2, 1, 2};
        s.sigma = std::vector<int>{1, 2};
    } else if (name == "g2") {
        s.d = {3, 1};
        s.z_interior = {{ZEntry{std::string("a")}, ZEntry{std::string("b")}}, {}};
        s.ks = {1, 2, 1, 2, 1, 2, 1, 2};
        s.sigma = std::vector<int>{1, 2};
    } else if (name == "b2-truncated") {
        s.d = {2, 1};
        s.z_interior = {{ZEntry{std::string("a")}}, {}};
        s.ks = {1, 2, 1, 2, 1};
    } else {
        throw InvalidInput("unknown builtin fixture: " + name);
    }
    return s;
}

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"involution", "a2", "b2", "g2", "b2-truncated"};
    return names;
}

// Expected mutated y-variables y_{k_t}[t], one formula per step, as
// parsable expressions over (y1, y2, a, b).
inline std::vector<std::string> fixture_y_formulas(const std::string& name) {
    if (name == "b2")
        return {
            "y1",
            "y2*(1 + a*y1 + y1^2)",
            "(1 + y2 + a*y1*y2 + y1^2*y2) / y1",
            "(1 + 2*y2 + y2^2 + a*y1*y2 + a*y1*y2^2 + y1^2*y2^2) / (y1^2*y2)",
            "(1 + y2) / (y1*y2)",
            "1 / y2",
        };
    if (name == "g2")
        return {
            "y1",
            "y2*(1 + a*y1 + b*y1^2 + y1^3)",
            "(1 + y2 + a*y1*y2 + b*y1^2*y2 + y1^3*y2) / y1",
            "(1 + 3*y2 + 3*y2^2 + y2^3 + 2*a*y1*y2 + 4*a*y1*y2^2 + 2*a*y1*y2^3"
            " + b*y1^2*y2 + a^2*y1^2*y2^2 + 3*b*y1^2*y2^2 + a^2*y1^2*y2^3 + 2*b*y1^2*y2^3"
            " + a*b*y1^3*y2^2 + 2*a*b*y1^3*y2^3 + 3*y1^3*y2^2 + 2*y1^3*y2^3"
            " + a*y1^4*y2^2 + 2*a*y1^4*y2^3 + b^2*y1^4*y2^3 + 2*b*y1^5*y2^3 + y1^6*y2^3)"
            " / (y1^3*y2)",
            "(1 + 2*y2 + y2^2 + a*y1*y2 + a*y1*y2^2 + b*y1^2*y2^2 + y1^3*y2^2) / (y1^2*y2)",
            "(1 + 3*y2 + 3*y2^2 + y2^3 + a*y1*y2 + 2*a*y1*y2^2 + a*y1*y2^3"
            " + b*y1^2*y2^2 + b*y1^2*y2^3 + y1^3*y2^3) / (y1^3*y2^2)",
            "(1 + y2) / (y1*y2)",
            "1 / y2",
        };
    throw InvalidInput("no stored y-formulas for fixture: " + name);
}

// Expected tropical signs per step.
inline std::vector<int> fixture_tropical_signs(const std::string& name) {
    if (name == "involution") return {1, -1};
    if (name == "b2") return {1, 1, -1, -1, -1, -1};
    if (name == "g2") return {1, 1, -1, -1, -1, -1, -1, -1};
    throw InvalidInput("no stored tropical signs for fixture: " + name);
}

// Parse "p/q"-style rational-function formulas over the coefficient
// variables of a seed (numerator and denominator polynomial each).
inline RatFunc parse_ratfunc(const std::string& expr, const VarsPtr& vars) {
    // Split on the last top-level '/'.
    int depth = 0;
    size_t slash = std::string::npos;
    for (size_t i = 0; i < expr.size(); ++i) {
        if (expr[i] == '(') ++depth;
        if (expr[i] == ')') --depth;
        if (expr[i] == '/' && depth == 0) slash = i;
    }
    if (slash == std::string::npos) return RatFunc::from_poly(parse_poly(expr, vars));
    return RatFunc(parse_poly(expr.substr(0, slash), vars),
                   parse_poly(expr.substr(slash + 1), vars));
}

} // namespace gca
