#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gca/semifield.hpp"

using namespace gca;

namespace {

SfElem rand_sf(const VarsPtr& vars, std::mt19937_64& rng, int depth = 2) {
    auto atom = [&]() -> SfElem {
        switch (rng() % 3) {
            case 0:
                return SfElem::generator(vars, vars->name(rng() % vars->arity()));
            case 1:
                return SfElem::constant(vars, Rat(1 + static_cast<long>(rng() % 5)));
            default: {
                MPoly p = MPoly::constant(vars, Rat(1 + static_cast<long>(rng() % 3)));
                p += MPoly::variable(vars, static_cast<int>(rng() % vars->arity()),
                                     1 + static_cast<int>(rng() % 2));
                return SfElem::from_poly(p);
            }
        }
    };
    SfElem e = atom();
    for (int i = 0; i < depth; ++i) {
        SfElem f = atom();
        switch (rng() % 3) {
            case 0: e = e * f; break;
            case 1: e = e + f; break;
            default: e = e * f.inv(); break;
        }
    }
    return e;
}

} // namespace

TEST_CASE("sf_eq spec examples") {
    auto vars = make_vars({"y"});
    SfElem y = SfElem::generator(vars, "y");
    SfElem one = SfElem::one(vars);

    CHECK(sf_eq((one + y) * (one + y).inv(), one));
    CHECK(sf_eq((one + y) * (one + y), SfElem::from_poly(parse_poly("1 + 2*y + y^2", vars))));
    CHECK(!sf_eq(y, one + y));
}

TEST_CASE("subtraction-free witness is enforced") {
    auto vars = make_vars({"y"});
    CHECK_THROWS_AS(SfElem::from_poly(parse_poly("1 - y", vars)), InvalidInput);
    CHECK_THROWS_AS(SfElem::from_poly(MPoly(vars)), InvalidInput);
    CHECK_THROWS_AS(SfElem::constant(vars, Rat(0)), InvalidInput);
}

TEST_CASE("tropicalize spec examples") {
    auto vars = make_vars({"y1", "y2", "a"});
    SfElem y1 = SfElem::generator(vars, "y1");
    SfElem y2 = SfElem::generator(vars, "y2");
    SfElem a = SfElem::generator(vars, "a");
    SfElem one = SfElem::one(vars);

    CHECK(tropicalize(y1).exps == std::vector<long long>{1, 0, 0});

    // y2 (1 + a y1 + y1^2)  ->  y2
    SfElem f = y2 * (one + a * y1 + y1.pow(2));
    CHECK(tropicalize(f).exps == std::vector<long long>{0, 1, 0});

    // y1^{-1} (1 + y2 + a y1 y2 + y1^2 y2)  ->  y1^{-1}
    SfElem g = y1.inv() * (one + y2 + a * y1 * y2 + y1.pow(2) * y2);
    CHECK(tropicalize(g).exps == std::vector<long long>{-1, 0, 0});
}

TEST_CASE("tropicalize is a semifield homomorphism (500 random pairs)") {
    auto vars = make_vars({"y1", "y2", "a"});
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 500; ++iter) {
        SfElem f = rand_sf(vars, rng);
        SfElem g = rand_sf(vars, rng);
        CHECK(tropicalize(f * g) == tropicalize(f) * tropicalize(g));
        CHECK(tropicalize(f + g) == trop_add(tropicalize(f), tropicalize(g)));
    }
}

TEST_CASE("eval_phi spec examples and homomorphism property") {
    auto vars = make_vars({"y", "a"});
    SfElem y = SfElem::generator(vars, "y");
    SfElem a = SfElem::generator(vars, "a");
    SfElem one = SfElem::one(vars);

    CHECK(eval_phi(one + y, {Rat(1), Rat(1)}) == Rat(2));
    CHECK(eval_phi(y * (one + y).inv(), {Rat(1), Rat(1)}) == make_rat(1, 2));
    CHECK(eval_phi(one + a * y + y.pow(2), {Rat(1), Rat(1)}) == Rat(3));
    CHECK_THROWS_AS(eval_phi(y, {Rat(0), Rat(1)}), InvalidInput);
    CHECK_THROWS_AS(eval_phi(y, {Rat(-2), Rat(1)}), InvalidInput);

    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 100; ++iter) {
        SfElem f = rand_sf(vars, rng);
        SfElem g = rand_sf(vars, rng);
        std::vector<Rat> phi{make_rat(1 + static_cast<long>(rng() % 16), 4),
                             make_rat(1 + static_cast<long>(rng() % 16), 4)};
        CHECK(eval_phi(f * g, phi) == eval_phi(f, phi) * eval_phi(g, phi));
        CHECK(eval_phi(f + g, phi) == eval_phi(f, phi) + eval_phi(g, phi));
        CHECK(eval_phi(f, phi) > 0);
    }
}

TEST_CASE("sf_eq is a congruence") {
    auto vars = make_vars({"y"});
    SfElem y = SfElem::generator(vars, "y");
    SfElem one = SfElem::one(vars);

    // Two representations of the same element.
    SfElem a = (one + y) * (one + y);
    SfElem b = SfElem::from_poly(parse_poly("1 + 2*y + y^2", vars));
    SfElem c = y + one;
    REQUIRE(sf_eq(a, b));
    CHECK(sf_eq(a * c, b * c));
    CHECK(sf_eq(a + c, b + c));
    CHECK(sf_eq(a.inv(), b.inv()));
    // Reflexive, symmetric.
    CHECK(sf_eq(a, a));
    CHECK(sf_eq(b, a));
}
