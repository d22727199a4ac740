#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gca/coprime.hpp"
#include "gca/mpoly.hpp"
#include "gca/mpoly_gcd.hpp"
#include "gca/sturm.hpp"

using namespace gca;

namespace {

MPoly rand_poly(const VarsPtr& vars, std::mt19937_64& rng, int max_terms, int max_deg) {
    MPoly p(vars);
    int nterms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < nterms; ++t) {
        Exp e(vars->arity(), 0);
        for (int v = 0; v < vars->arity(); ++v) e[v] = static_cast<int>(rng() % (max_deg + 1));
        long c = static_cast<long>(rng() % 9) - 4;
        if (c == 0) c = 1;
        p += MPoly::monomial(vars, e, Rat(c));
    }
    return p;
}

bool is_associate(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.primitive_part() == b.primitive_part();
}

} // namespace

TEST_CASE("mpoly basic arithmetic and parsing") {
    auto vars = make_vars({"x", "y"});
    MPoly p = parse_poly("(x+y)^2", vars);
    MPoly q = parse_poly("x^2 + 2*x*y + y^2", vars);
    CHECK(p == q);

    CHECK(parse_poly("x - x", vars).is_zero());
    CHECK(parse_poly("3/4*x - x*3/4 + 1", vars).is_one());
    CHECK(parse_poly("x*y", vars).total_degree() == 2);
    CHECK(parse_poly("(1+x)*(1-x)", vars) == parse_poly("1-x^2", vars));
    CHECK_THROWS_AS(parse_poly("w+1", vars), InvalidInput);

    MPoly f = parse_poly("2*x^2*y - 4*y", vars);
    CHECK(f.content() == Rat(2));
    CHECK(f.primitive_part() == parse_poly("x^2*y - 2*y", vars));

    auto quot = parse_poly("x^2-y^2", vars).exact_div(parse_poly("x+y", vars));
    REQUIRE(quot.has_value());
    CHECK(*quot == parse_poly("x-y", vars));
    CHECK(!parse_poly("x^2+y", vars).exact_div(parse_poly("x+y", vars)).has_value());
}

TEST_CASE("mpoly_gcd on the spec examples") {
    auto vars = make_vars({"x", "y"});

    // gcd with zero returns the normalized other argument.
    MPoly zero(vars);
    CHECK(mpoly_gcd(zero, parse_poly("x^2-1", vars)) == parse_poly("x^2-1", vars));

    // gcd(x^2 y - y, x y - y) = y (x - 1) up to normalization.
    MPoly g = mpoly_gcd(parse_poly("x^2*y - y", vars), parse_poly("x*y - y", vars));
    CHECK(is_associate(g, parse_poly("y*x - y", vars)));

    CHECK(mpoly_gcd(parse_poly("x+1", vars), parse_poly("y+1", vars)).is_one());
}

TEST_CASE("mpoly_gcd multiplicative property on random inputs") {
    auto vars = make_vars({"x", "y", "z"});
    std::mt19937_64 rng(20240811);
    int nontrivial = 0;
    for (int iter = 0; iter < 60; ++iter) {
        MPoly a = rand_poly(vars, rng, 3, 2);
        MPoly b = rand_poly(vars, rng, 3, 2);
        MPoly c = rand_poly(vars, rng, 3, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        MPoly g1 = mpoly_gcd(a * c, b * c);
        MPoly g2 = mpoly_gcd(a, b) * c;
        CHECK(is_associate(g1, g2));
        if (!mpoly_gcd(a, b).is_one()) ++nontrivial;
    }
    CHECK(nontrivial > 0); // the sample must exercise nontrivial gcds
}

TEST_CASE("coprime_basis spec examples") {
    auto vars = make_vars({"x", "y"});

    SECTION("repeated element") {
        auto cb = coprime_basis({parse_poly("x", vars), parse_poly("x^2", vars)});
        REQUIRE(cb.basis.size() == 1);
        CHECK(cb.basis[0] == parse_poly("x", vars));
        CHECK(cb.poly_exps[0] == std::vector<long long>{1});
        CHECK(cb.poly_exps[1] == std::vector<long long>{2});
    }

    SECTION("shared factor is split off") {
        auto cb = coprime_basis({parse_poly("x*(1+y)", vars), parse_poly("(1+y)^2", vars)});
        REQUIRE(cb.basis.size() == 2);
        // Basis is sorted by term maps; identify by string.
        std::vector<std::string> names{cb.basis[0].to_string(), cb.basis[1].to_string()};
        std::sort(names.begin(), names.end());
        CHECK(names == std::vector<std::string>{"x", "y + 1"});
    }

    SECTION("integer constants factor into primes") {
        auto cb = coprime_basis({MPoly::constant(vars, Rat(6)), MPoly::constant(vars, Rat(10))});
        CHECK(cb.basis.empty());
        REQUIRE(cb.primes == std::vector<Int>{Int(2), Int(3), Int(5)});
        CHECK(cb.prime_exps[0] == std::vector<long long>{1, 1, 0});
        CHECK(cb.prime_exps[1] == std::vector<long long>{1, 0, 1});
    }

    SECTION("zero input is rejected") {
        CHECK_THROWS_AS(coprime_basis({MPoly(vars)}), InvalidInput);
    }
}

TEST_CASE("coprime_basis reconstructs every input") {
    auto vars = make_vars({"x", "y"});
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<MPoly> inputs;
        // Build inputs as products of small factors so that nontrivial
        // refinement actually happens.
        std::vector<MPoly> pool{parse_poly("x", vars),     parse_poly("y", vars),
                                parse_poly("1+x", vars),   parse_poly("1+y", vars),
                                parse_poly("1+x+y", vars), parse_poly("2+x*y", vars)};
        for (int i = 0; i < 4; ++i) {
            MPoly f = MPoly::constant(vars, Rat(1 + static_cast<long>(rng() % 12)));
            int nf = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < nf; ++j) f *= pool[rng() % pool.size()].pow(1 + rng() % 2);
            inputs.push_back(f);
        }
        auto cb = coprime_basis(inputs);
        for (size_t j = 0; j < cb.basis.size(); ++j)
            for (size_t k = j + 1; k < cb.basis.size(); ++k)
                CHECK(mpoly_gcd(cb.basis[j], cb.basis[k]).is_one());
        for (size_t i = 0; i < inputs.size(); ++i) {
            MPoly prod = MPoly::constant(vars, Rat(1));
            for (size_t j = 0; j < cb.basis.size(); ++j)
                prod *= cb.basis[j].pow(static_cast<int>(cb.poly_exps[i][j]));
            Rat c(1);
            for (size_t k = 0; k < cb.primes.size(); ++k)
                c *= rat_pow(Rat(cb.primes[k]), static_cast<long>(cb.prime_exps[i][k]));
            CHECK(prod * c == inputs[i]);
        }
    }
}

TEST_CASE("sturm_real_root_count basics") {
    auto vars = make_vars({"x"});
    CHECK(sturm_real_root_count(parse_poly("x^2+1", vars)) == 0);
    CHECK(sturm_real_root_count(parse_poly("x^2-1", vars)) == 2);
    CHECK(sturm_real_root_count(parse_poly("x^2+x+1", vars)) == 0);
    CHECK(sturm_real_root_count(parse_poly("x^3-x", vars)) == 3);
    CHECK(sturm_real_root_count(parse_poly("(x-1)^4", vars)) == 1);
    CHECK(sturm_real_root_count(parse_poly("7", vars)) == 0);
    CHECK_THROWS_AS(sturm_real_root_count(MPoly(vars)), InvalidInput);
}

TEST_CASE("sturm count agrees with bisection oracle on random cubics/quartics") {
    auto vars = make_vars({"x"});
    std::mt19937_64 rng(123456);

    for (int iter = 0; iter < 1000; ++iter) {
        // Distinct rational roots on a coarse grid in [-10, 10], with
        // random multiplicities, optionally times an irreducible
        // quadratic; total degree 3 or 4.
        int target_deg = 3 + static_cast<int>(rng() % 2);
        std::vector<Rat> roots;
        std::vector<int> mult;
        int deg_used = 0;
        bool quad = (rng() % 3 == 0) && target_deg == 4;
        int root_budget = target_deg - (quad ? 2 : 0);
        while (deg_used < root_budget) {
            Rat r = make_rat(static_cast<long>(rng() % 161) - 80, 8); // k/8 in [-10, 10]
            bool dup = false;
            for (const Rat& prev : roots)
                if (prev == r) dup = true;
            if (dup) continue;
            int m = 1 + static_cast<int>(rng() % (root_budget - deg_used));
            roots.push_back(r);
            mult.push_back(m);
            deg_used += m;
        }
        MPoly p = MPoly::constant(vars, Rat(1));
        MPoly x = parse_poly("x", vars);
        for (size_t i = 0; i < roots.size(); ++i)
            p *= (x - MPoly::constant(vars, roots[i])).pow(mult[i]);
        if (quad) {
            long c = 1 + static_cast<long>(rng() % 5);
            p *= (x * x + MPoly::constant(vars, Rat(c)));
        }

        // Oracle: exhaustive interval bisection with sign changes on the
        // radical (distinct-root product), built independently of the
        // Sturm machinery under test.
        MPoly radical = MPoly::constant(vars, Rat(1));
        for (const Rat& r : roots) radical *= (x - MPoly::constant(vars, r));
        auto sign_at = [&](const Rat& v) { return sgn(radical.eval({v})); };
        int oracle = 0;
        Rat lo(-21, 2), hi(21, 2);
        // Grid fine enough to separate roots at spacing 1/8.
        const long steps = 8 * 21 * 2; // width 1/16
        Rat step = (hi - lo) / steps;
        Rat a = lo;
        int prev = sign_at(a);
        for (long sidx = 1; sidx <= steps; ++sidx) {
            Rat b = lo + step * sidx;
            int sb = sign_at(b);
            if (sb == 0) {
                ++oracle; // grid point is a root (grid contains all k/8)
                prev = 0;
            } else {
                if (prev != 0 && sb != prev) ++oracle;
                prev = sb;
            }
        }
        CHECK(oracle == static_cast<int>(roots.size()));
        CHECK(sturm_real_root_count(p) == static_cast<int>(roots.size()));
    }
}
