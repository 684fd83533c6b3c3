#include <doctest.h>

#include <random>

#include "nullcone/linalg.hpp"
#include "nullcone/minnorm.hpp"
#include "nullcone/rep.hpp"

using namespace nullcone;

namespace {

RatVec vec(std::initializer_list<long> xs) {
    RatVec v(xs.size());
    std::size_t i = 0;
    for (long x : xs) v[i++] = Rat(x);
    return v;
}

Rat rnd_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("inner products") {
    CHECK(inner(vec({1, 0, 0}), vec({1, 0, 0})) == Rat(1));
    CHECK(inner(vec({3, -2, 5}), vec({0, 0, 0})) == Rat(0));

    // the published orthogonality: a destabilizing 1-PS against its beta
    RatVec beta2(9);
    long b2[] = {-4, -4, -4, -4, 16, -5, -5, -5, 15};
    for (int i = 0; i < 9; ++i) beta2[i] = Rat(7 * b2[i], 620);
    RatVec lam2 = vec({-39, 45, -22, 28, -12, -32, 35, -15, 12});
    CHECK(inner(beta2, lam2) == Rat(0));

    CHECK_THROWS_AS(inner(vec({1}), vec({1, 2})), std::invalid_argument);

    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        RatVec a(4), b(4), c(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = rnd_rat(rng);
            b[i] = rnd_rat(rng);
            c[i] = rnd_rat(rng);
        }
        Rat s = rnd_rat(rng);
        CHECK(inner(a, b) == inner(b, a));
        CHECK(inner(a + (s * b), c) == inner(a, c) + s * inner(b, c));
    }
}

TEST_CASE("linear solve") {
    SUBCASE("identity") {
        RatMat A = RatMat::identity(3);
        auto sol = solve(A, vec({0, 0, 0}));
        REQUIRE(sol);
        CHECK(sol->particular.is_zero());
        CHECK(sol->kernel.empty());
    }
    SUBCASE("zero matrix") {
        RatMat A(2, 5);
        auto sol = solve(A, vec({0, 0}));
        REQUIRE(sol);
        CHECK(sol->kernel.size() == 5);
    }
    SUBCASE("inconsistent") {
        RatMat A(2, 1);
        A(0, 0) = Rat(1);
        A(1, 0) = Rat(1);
        CHECK(!solve(A, vec({1, 2})));
    }
    SUBCASE("random systems solve exactly") {
        std::mt19937 rng(11);
        for (int t = 0; t < 40; ++t) {
            std::uniform_int_distribution<int> dim(1, 5);
            int m = dim(rng), n = dim(rng);
            RatMat A(m, n);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) A(i, j) = rnd_rat(rng);
            RatVec x0(n);
            for (int j = 0; j < n; ++j) x0[j] = rnd_rat(rng);
            RatVec b = A.apply(x0);
            auto sol = solve(A, b);
            REQUIRE(sol);
            CHECK(A.apply(sol->particular) == b);
            for (const auto& k : sol->kernel) CHECK(A.apply(k).is_zero());
            CHECK(rank(A) + sol->kernel.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("min-norm point in an affine hull") {
    SUBCASE("single point") {
        auto mn = min_norm_affine({vec({2, 3})});
        CHECK(mn.point == vec({2, 3}));
        REQUIRE(mn.coeffs.size() == 1);
        CHECK(mn.coeffs[0] == Rat(1));
    }
    SUBCASE("symmetric pair") {
        auto mn = min_norm_affine({vec({1, 0}), vec({0, 1})});
        CHECK(mn.point[0] == Rat(1, 2));
        CHECK(mn.point[1] == Rat(1, 2));
        CHECK(mn.coeffs[0] == Rat(1, 2));
        CHECK(mn.coeffs[1] == Rat(1, 2));
    }
    SUBCASE("flagship second-factor weights give the first stratifying vector") {
        auto table = build_weight_table(flagship_rep());
        // coordinates 11..40, reduced to a spanning affinely independent set
        std::vector<RatVec> S;
        for (std::size_t o = 11; o <= 40; ++o) {
            S.push_back(table.gamma[o - 1]);
            try {
                min_norm_affine(S);
            } catch (const std::invalid_argument&) {
                S.pop_back();
            }
        }
        auto mn = min_norm_affine(S);
        RatVec expect(9);
        long e[] = {0, 0, 0, 0, 0, -3, 1, 1, 1};
        for (int i = 0; i < 9; ++i) expect[i] = Rat(e[i], 12);
        CHECK(mn.point == expect);
        for (const auto& s : S) CHECK(inner(mn.point, s - S[0]).is_zero());
    }
    SUBCASE("dependent input rejected") {
        CHECK_THROWS_AS(min_norm_affine({vec({1, 1}), vec({2, 2}), vec({3, 3})}),
                        std::invalid_argument);
    }
    SUBCASE("orthogonality on random independent sets") {
        std::mt19937 rng(5);
        for (int t = 0; t < 30; ++t) {
            std::vector<RatVec> S;
            for (int k = 0; k < 3; ++k) {
                RatVec v(4);
                for (int i = 0; i < 4; ++i) v[i] = rnd_rat(rng);
                S.push_back(v);
            }
            MinNormPoint mn;
            try {
                mn = min_norm_affine(S);
            } catch (const std::invalid_argument&) {
                continue;
            }
            RatVec combo(4);
            for (std::size_t i = 0; i < S.size(); ++i) combo += mn.coeffs[i] * S[i];
            CHECK(combo == mn.point);
            for (std::size_t i = 1; i < S.size(); ++i)
                CHECK(inner(mn.point, S[i] - S[0]).is_zero());
        }
    }
}

TEST_CASE("hull membership from barycentric coefficients") {
    CHECK(in_hull({Rat(1)}));
    CHECK(in_hull({Rat(1, 2), Rat(1, 2)}));
    CHECK(!in_hull({Rat(3, 2), Rat(-1, 2)}));

    std::vector<RatVec> S = {vec({1, 0}), vec({0, 1})};
    CHECK(in_hull(vec({1, 0}), S, {Rat(1), Rat(0)}));          // a vertex
    RatVec mid(2);
    mid[0] = Rat(1, 2);
    mid[1] = Rat(1, 2);
    CHECK(in_hull(mid, S, {Rat(1, 2), Rat(1, 2)}));            // a midpoint
    RatVec outside(2);
    outside[0] = Rat(3, 2);
    outside[1] = Rat(-1, 2);
    CHECK(!in_hull(outside, S, {Rat(3, 2), Rat(-1, 2)}));      // negative coordinate
    CHECK_THROWS_AS(in_hull(mid, S, {Rat(1), Rat(1)}), std::invalid_argument);
}
