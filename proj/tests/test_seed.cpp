#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gca/fixtures.hpp"
#include "gca/seed.hpp"

using namespace gca;

namespace {

// Random small seed spec: rank <= 3, d_i <= 3, entries of B in
// {-1, 0, 1} (the fixtures cover larger entries deterministically).
SeedSpec random_spec(std::mt19937_64& rng, int max_rank = 3, int max_d = 3) {
    SeedSpec s;
    s.rank = 1 + static_cast<int>(rng() % max_rank);
    s.B.assign(s.rank, std::vector<long long>(s.rank, 0));
    for (int i = 0; i < s.rank; ++i)
        for (int j = i + 1; j < s.rank; ++j) {
            long long v = static_cast<long long>(rng() % 3) - 1;
            s.B[i][j] = v;
            s.B[j][i] = -v; // skew-symmetric, always symmetrizable
        }
    for (int i = 0; i < s.rank; ++i) s.d.push_back(1 + static_cast<int>(rng() % max_d));
    s.z_interior.resize(s.rank);
    int sym = 0;
    for (int i = 0; i < s.rank; ++i)
        for (int t = 1; t < s.d[i]; ++t) {
            if (rng() % 2)
                s.z_interior[i].push_back(std::string("c") + std::to_string(++sym));
            else
                s.z_interior[i].push_back(Rat(1 + static_cast<long>(rng() % 4)));
        }
    return s;
}

bool seeds_equal(const GCASeed& a, const GCASeed& b) {
    if (a.B != b.B) return false;
    for (int i = 0; i < a.n; ++i) {
        if (!sf_eq(a.y[i], b.y[i])) return false;
        if (!a.x.empty() && a.x[i] != b.x[i]) return false;
        for (size_t s = 0; s < a.z[i].size(); ++s)
            if (!sf_eq(a.z[i][s], b.z[i][s])) return false;
    }
    return true;
}

} // namespace

TEST_CASE("skew_symmetrizer") {
    CHECK(skew_symmetrizer({{0, -1}, {1, 0}}).r == std::vector<long long>{1, 1});
    CHECK(skew_symmetrizer({{0, -2}, {1, 0}}).r == std::vector<long long>{1, 2});
    CHECK(skew_symmetrizer({{0, -1, 0}, {2, 0, -3}, {0, 1, 0}}).r ==
          std::vector<long long>{2, 1, 3});
    CHECK_THROWS_AS(skew_symmetrizer({{0, 1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(skew_symmetrizer({{0, 1}, {0, 0}}), InvalidInput);
    CHECK_THROWS_AS(skew_symmetrizer({{1}}), InvalidInput);

    SymmetrizerData sd = skew_symmetrizer({{0, -2}, {1, 0}});
    CHECK(sd.r_lcm == 2);
    CHECK(sd.r_tilde == std::vector<long long>{2, 1});
}

TEST_CASE("b2 mutation reproduces the paper data step by step") {
    auto traj = run_spec(builtin_spec("b2"));
    auto formulas = fixture_y_formulas("b2");
    const VarsPtr& coef = traj.initial().coef_vars;
    for (int t = 0; t < traj.length(); ++t) {
        RatFunc expect = parse_ratfunc(formulas[t], coef);
        RatFunc got = traj.seeds[t].y[traj.ks[t]].as_ratfunc();
        INFO("step " << t + 1);
        CHECK(got == expect);
    }
    // z-variables: z1 = (1,a,1) and z2 = (1,1) are reciprocal, so every
    // z[t] equals the initial one.
    for (const auto& seed : traj.seeds)
        for (int i = 0; i < 2; ++i)
            for (size_t s = 0; s < seed.z[i].size(); ++s)
                CHECK(sf_eq(seed.z[i][s], traj.initial().z[i][s]));
}

TEST_CASE("g2 mutation reproduces the paper data step by step") {
    auto traj = run_spec(builtin_spec("g2"));
    auto formulas = fixture_y_formulas("g2");
    const VarsPtr& coef = traj.initial().coef_vars;
    for (int t = 0; t < traj.length(); ++t) {
        RatFunc expect = parse_ratfunc(formulas[t], coef);
        RatFunc got = traj.seeds[t].y[traj.ks[t]].as_ratfunc();
        INFO("step " << t + 1);
        CHECK(got == expect);
    }

    // z1 is not reciprocal: the tuple flips exactly at mu_1 steps.
    auto z1_at = [&](int t) { return traj.seeds[t].z[0]; };
    const VarsPtr& cv = coef;
    SfElem a = SfElem::generator(cv, "a");
    SfElem b = SfElem::generator(cv, "b");
    CHECK(sf_eq(z1_at(0)[1], a));
    CHECK(sf_eq(z1_at(2)[1], b)); // z1[3] = z1*
    CHECK(sf_eq(z1_at(4)[1], a)); // z1[5] = z1
    CHECK(sf_eq(z1_at(6)[1], b)); // z1[7] = z1*
}

TEST_CASE("mutation is an involution on random seeds") {
    std::mt19937_64 rng(2025);
    for (int iter = 0; iter < 12; ++iter) {
        SeedSpec spec = random_spec(rng);
        GCASeed s0 = make_initial_seed(spec);
        // Walk one random step first so the seed is nontrivial.
        GCASeed s = mutate_seed(s0, static_cast<int>(rng() % spec.rank));
        int k = static_cast<int>(rng() % spec.rank);
        GCASeed back = mutate_seed(mutate_seed(s, k), k);
        CHECK(seeds_equal(s, back));
    }
}

TEST_CASE("mutation preserves the skew-symmetrizer") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 12; ++iter) {
        SeedSpec spec = random_spec(rng);
        GCASeed s = make_initial_seed(spec, /*with_x=*/false);
        SymmetrizerData before = skew_symmetrizer(s.B);
        for (int w = 0; w < 4; ++w) {
            s = mutate_seed(s, static_cast<int>(rng() % spec.rank));
            CHECK(skew_symmetrizer(s.B).r == before.r);
        }
    }
}

TEST_CASE("rank-2 mutation flips B") {
    auto s = make_initial_seed(builtin_spec("b2"));
    auto t = mutate_seed(s, 0);
    CHECK(t.B == IMat{{0, 1}, {-1, 0}});
    auto u = mutate_seed(s, 1);
    CHECK(u.B == IMat{{0, 1}, {-1, 0}});
}

TEST_CASE("yhat variables") {
    SECTION("B = 0 gives yhat = y") {
        SeedSpec spec;
        spec.rank = 2;
        spec.B = {{0, 0}, {0, 0}};
        spec.d = {2, 1};
        spec.z_interior = {{std::string("a")}, {}};
        spec.ks = {};
        GCASeed s = make_initial_seed(spec);
        auto yh = yhat_vars(s);
        for (int i = 0; i < 2; ++i) CHECK(yh[i] == s.y[i].as_ratfunc(s.full_vars));
    }

    SECTION("initial B2 seed: yhat1 = y1 x2, yhat2 = y2 / x1") {
        GCASeed s = make_initial_seed(builtin_spec("b2"));
        auto yh = yhat_vars(s);
        const VarsPtr& fv = s.full_vars;
        CHECK(yh[0] == RatFunc::from_poly(parse_poly("y1*x2", fv)));
        CHECK(yh[1] == RatFunc(parse_poly("y2", fv), parse_poly("x1", fv)));
    }

    SECTION("yhat transforms like y under mutation") {
        std::mt19937_64 rng(77);
        for (int iter = 0; iter < 8; ++iter) {
            SeedSpec spec = random_spec(rng, 3, 2);
            GCASeed s = make_initial_seed(spec);
            int k = static_cast<int>(rng() % spec.rank);
            GCASeed t = mutate_seed(s, k);
            auto yh = yhat_vars(s);
            auto yh2 = yhat_vars(t);

            RatFunc p_hat = s.z[k][0].as_ratfunc(s.full_vars);
            for (int deg = 1; deg <= s.d[k]; ++deg)
                p_hat = p_hat + s.z[k][deg].as_ratfunc(s.full_vars) * yh[k].pow(deg);

            for (int i = 0; i < spec.rank; ++i) {
                RatFunc expect =
                    (i == k) ? yh[k].inv()
                             : yh[i] * yh[k].pow(positive_part(s.B[k][i]) * s.d[k]) *
                                   p_hat.pow(-s.B[k][i]);
                CHECK(yh2[i] == expect);
            }
        }
    }
}

TEST_CASE("run_sequence length and trivial cases") {
    GCASeed s = make_initial_seed(builtin_spec("b2"));
    auto traj0 = run_sequence(s, {});
    CHECK(traj0.seeds.size() == 1);
    auto traj = run_spec(builtin_spec("b2"));
    CHECK(traj.seeds.size() == 7);
}

TEST_CASE("sigma-periodicity checks") {
    SECTION("involution is periodic with the identity") {
        auto traj = run_spec(builtin_spec("involution"));
        auto rep = check_sigma_period(traj);
        REQUIRE(rep.periodic);
        CHECK(rep.sigma == std::vector<int>{0, 1});
        CHECK(rep.symmetrizer_consistent);
        // z returns as well: it flips at step 1 and flips back at step 2.
        CHECK(rep.z_relation == std::vector<std::string>{"same", "same"});
    }

    SECTION("b2 six-step is periodic with the identity") {
        auto traj = run_spec(builtin_spec("b2"));
        auto rep = check_sigma_period(traj, std::vector<int>{0, 1});
        REQUIRE(rep.periodic);
        CHECK(rep.b_matches);
        CHECK(rep.y_matches);
        CHECK(rep.x_matches);
    }

    SECTION("a2 pentagon is periodic with the transposition") {
        auto traj = run_spec(builtin_spec("a2"));
        auto rep = check_sigma_period(traj);
        REQUIRE(rep.periodic);
        CHECK(rep.sigma == std::vector<int>{1, 0});
    }

    SECTION("b2 five-step prefix is not periodic for any sigma") {
        auto traj = run_spec(builtin_spec("b2-truncated"));
        auto rep = check_sigma_period(traj);
        CHECK(!rep.periodic);
    }

    SECTION("g2 eight-step is periodic") {
        auto traj = run_spec(builtin_spec("g2"));
        auto rep = check_sigma_period(traj, std::vector<int>{0, 1});
        REQUIRE(rep.periodic);
        // z also returns here even though z1 is not reciprocal: it
        // flips at t = 1,3,5,7.
        CHECK(rep.z_relation == std::vector<std::string>{"same", "same"});
    }
}

TEST_CASE("laurent property of x-variables on fixtures (universal coefficients)") {
    // With universal coefficients the x-variables are not Laurent in
    // general, but their reduced denominators must only involve y and z
    // after clearing the y-polynomial part: here we just check the
    // trajectory runs and x returns periodically, which the
    // sigma-period test above asserts. The tropical-coefficient Laurent
    // check lives in test_fpoly with the F-polynomial oracle.
    auto traj = run_spec(builtin_spec("b2"));
    CHECK(traj.final().x.size() == 2);
}

TEST_CASE("seed spec validation") {
    SeedSpec bad = builtin_spec("b2");
    bad.B = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(make_initial_seed(bad), InvalidInput);

    SeedSpec wrongz = builtin_spec("b2");
    wrongz.z_interior[0].clear();
    CHECK_THROWS_AS(make_initial_seed(wrongz), InvalidInput);

    SeedSpec outofrange = builtin_spec("b2");
    outofrange.ks = {3};
    CHECK_THROWS_AS(run_spec(outofrange), InvalidInput);
}
