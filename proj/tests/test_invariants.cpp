#include <doctest.h>

#include <random>

#include "nullcone/invariants.hpp"
#include "nullcone/linalg.hpp"
#include "nullcone/recipes.hpp"

using namespace nullcone;

namespace {

const std::string kDataDir = NULLCONE_DATA_DIR;

RatMat alt(std::size_t n, std::initializer_list<std::tuple<int, int, long>> entries) {
    RatMat m(n, n);
    for (auto [i, j, v] : entries) {
        m(i - 1, j - 1) = Rat(v);
        m(j - 1, i - 1) = Rat(-v);
    }
    return m;
}

RatMat mat(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
    RatMat m(r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(*it++);
    return m;
}

Rat rnd_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(rng), den(rng));
}

RatMat rnd_invertible(std::mt19937& rng, std::size_t n) {
    for (;;) {
        RatMat g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = rnd_rat(rng);
        if (!determinant(g).is_zero()) return g;
    }
}

RatMat rnd_alt(std::mt19937& rng, std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = rnd_rat(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

RatMat congruence(const RatMat& g, const RatMat& a) {
    std::size_t n = g.rows();
    RatMat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat acc;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) acc += g(i, k) * a(k, l) * g(j, l);
            out(i, j) = acc;
        }
    return out;
}

Rat pow(const Rat& x, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// substitute v_i -> sum_k g(k, i) v_k
Poly poly_group_subst(const Poly& p, const RatMat& g) {
    std::size_t n = p.arity();
    std::vector<Poly> images;
    for (std::size_t i = 0; i < n; ++i) {
        Poly im(n);
        for (std::size_t k = 0; k < n; ++k) {
            Poly::Mono m(n, 0);
            m[k] = 1;
            im.add_term(m, g(k, i));
        }
        images.push_back(im);
    }
    Poly out(n);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(c, n);
        for (std::size_t i = 0; i < n; ++i)
            for (int e = 0; e < m[i]; ++e) term *= images[i];
        out += term;
    }
    return out;
}

}  // namespace

TEST_CASE("pfaffian sign convention") {
    CHECK(pfaffian(alt(2, {{1, 2, 1}})) == Rat(1));
    CHECK(pfaffian(alt(4, {{1, 2, 1}, {3, 4, 1}})) == Rat(1));
    CHECK(pfaffian(RatMat(4, 4)) == Rat(0));

    SUBCASE("symbolic 4x4") {
        PolyMatrix m(4, 6);
        int var = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                m(i, j) = Poly::var(var, 6);
                m(j, i) = -m(i, j);
                ++var;
            }
        Poly expect(6);
        auto mono = [](std::initializer_list<int> on) {
            Poly::Mono mm(6, 0);
            for (int i : on) mm[i] = 1;
            return mm;
        };
        expect.add_term(mono({0, 5}), Rat(1));
        expect.add_term(mono({1, 4}), Rat(-1));
        expect.add_term(mono({2, 3}), Rat(1));
        CHECK(pfaffian(m) == expect);
    }

    SUBCASE("squares to the determinant") {
        std::mt19937 rng(31);
        for (std::size_t n : {2u, 4u, 6u}) {
            for (int t = 0; t < 10; ++t) {
                RatMat a = rnd_alt(rng, n);
                Rat pf = pfaffian(a);
                CHECK(pf * pf == determinant(a));
            }
        }
        for (int t = 0; t < 5; ++t) {
            RatMat a = rnd_alt(rng, 4);
            RatMat g = rnd_invertible(rng, 4);
            CHECK(pfaffian(congruence(g, a)) == determinant(g) * pfaffian(a));
        }
    }

    CHECK_THROWS_AS(pfaffian(PolyMatrix(3, 1)), std::invalid_argument);
}

TEST_CASE("binary discriminants") {
    Poly q(2);
    q.add_term({1, 1}, Rat(1));
    CHECK(disc_binary(q, 2) == Rat(1));

    Poly cubic(2);
    cubic.add_term({2, 1}, Rat(1));
    cubic.add_term({1, 2}, Rat(-1));
    CHECK(disc_binary(cubic, 3) == Rat(1));

    Poly sq(2);
    sq.add_term({2, 0}, Rat(1));
    CHECK(disc_binary(sq, 2) == Rat(0));
}

TEST_CASE("quadratic form discriminants") {
    Poly h4(4);
    h4.add_term({1, 0, 0, 1}, Rat(1));
    h4.add_term({0, 1, 1, 0}, Rat(-1));
    CHECK(disc_quadratic_form(h4) == Rat(1));

    Poly h3(3);
    h3.add_term({1, 0, 1}, Rat(1));
    h3.add_term({0, 2, 0}, Rat(1));
    CHECK(disc_quadratic_form(h3) == Rat(1));

    Poly degen(3);
    degen.add_term({1, 1, 0}, Rat(1));
    CHECK(disc_quadratic_form(degen) == Rat(0));
}

TEST_CASE("determinant pencils of the small cases") {
    RatMat a1 = mat(2, 2, {1, 0, 0, 0});
    RatMat a2 = mat(2, 2, {0, 0, 0, 1});
    CHECK(p_222(a1, a2) == Rat(1));

    RatMat b1 = mat(3, 3, {1, 0, 0, 0, -1, 0, 0, 0, 0});
    RatMat b2 = mat(3, 3, {0, 0, 0, 0, 1, 0, 0, 0, -1});
    CHECK(p_332(b1, b2) == Rat(1));

    CHECK(p_wedge42(alt(4, {{1, 2, 1}}), alt(4, {{3, 4, 1}})) == Rat(1));
}

TEST_CASE("five-by-five sub-Pfaffians and their wedge") {
    RatMat w1 = alt(5, {{1, 4, 1}, {2, 3, -1}});
    RatMat w2 = alt(5, {{1, 5, -1}, {2, 4, 2}});
    RatMat w3 = alt(5, {{2, 5, 1}, {3, 4, -1}});
    RatMat w2p = alt(5, {{1, 5, -1}, {2, 4, 1}});

    SUBCASE("sub-Pfaffian values") {
        PolyMatrix x(5, 3);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                Poly e(3);
                e.add_term({1, 0, 0}, w1(i, j));
                e.add_term({0, 1, 0}, w2(i, j));
                e.add_term({0, 0, 1}, w3(i, j));
                x(i, j) = e;
            }
        auto pf = sub_pfaffians_5(x);
        Poly l6(3), l5(3), l34(3), l2(3), l1(3);
        l6.add_term({0, 0, 2}, Rat(-1));
        l5.add_term({0, 1, 1}, Rat(-1));
        l34.add_term({1, 0, 1}, Rat(-1));
        l34.add_term({0, 2, 0}, Rat(-2));
        l2.add_term({1, 1, 0}, Rat(-1));
        l1.add_term({2, 0, 0}, Rat(-1));
        CHECK(pf[0] == l6);
        CHECK(pf[1] == l5);
        CHECK(pf[2] == l34);
        CHECK(pf[3] == l2);
        CHECK(pf[4] == l1);
    }

    SUBCASE("wedge of the quadrics against the dual basis") {
        auto y = phi_wedge53(w1, w2, w3);
        CHECK(y == std::array<Rat, 6>{Rat(0), Rat(0), Rat(-2), Rat(1), Rat(0), Rat(0)});
        auto yp = phi_wedge53(w1, w2p, w3);
        CHECK(yp == std::array<Rat, 6>{Rat(0), Rat(0), Rat(-1), Rat(1), Rat(0), Rat(0)});
    }

    SUBCASE("golden values") {
        CHECK(p_wedge53(w1, w2, w3) == Rat(4));
        CHECK(p_wedge53(w1, w2p, w3) == Rat(1));
    }

    SUBCASE("equivariance") {
        std::mt19937 rng(42);
        for (int t = 0; t < 6; ++t) {
            RatMat g1 = rnd_invertible(rng, 5);
            RatMat g2 = rnd_invertible(rng, 3);
            RatMat c1 = congruence(g1, w1), c2 = congruence(g1, w2), c3 = congruence(g1, w3);
            auto mix = [&](int c) {
                RatMat out(5, 5);
                const RatMat* comps[3] = {&c1, &c2, &c3};
                for (int d = 0; d < 3; ++d)
                    for (int i = 0; i < 5; ++i)
                        for (int j = 0; j < 5; ++j) out(i, j) += g2(c, d) * (*comps[d])(i, j);
                return out;
            };
            Rat lhs = p_wedge53(mix(0), mix(1), mix(2));
            Rat chi = pow(determinant(g1), 12) * pow(determinant(g2), 10);
            CHECK(lhs == chi * p_wedge53(w1, w2, w3));
        }
    }
}

TEST_CASE("quadratic form from wedge^2(Aff^4) (x) Aff^3") {
    RatMat j1 = alt(4, {{1, 2, 1}});
    RatMat j2 = alt(4, {{1, 4, 1}, {2, 3, -1}});
    RatMat j3 = alt(4, {{3, 4, 1}});

    Poly phi = phi_sym2_of_wedge43(j1, j2, j3);
    Poly expect(4);
    expect.add_term({1, 0, 0, 1}, Rat(1));
    expect.add_term({0, 1, 1, 0}, Rat(-1));
    CHECK(phi == expect);
    CHECK(p_wedge43(j1, j2, j3) == Rat(1));
    CHECK(phi_sym2_of_wedge43(RatMat(4, 4), RatMat(4, 4), RatMat(4, 4)).is_zero());

    SUBCASE("equivariance") {
        std::mt19937 rng(5);
        for (int t = 0; t < 5; ++t) {
            RatMat g1 = rnd_invertible(rng, 4);
            RatMat g2 = rnd_invertible(rng, 3);
            RatMat c1 = congruence(g1, j1), c2 = congruence(g1, j2), c3 = congruence(g1, j3);
            auto mix = [&](int c) {
                RatMat out(4, 4);
                const RatMat* comps[3] = {&c1, &c2, &c3};
                for (int d = 0; d < 3; ++d)
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j) out(i, j) += g2(c, d) * (*comps[d])(i, j);
                return out;
            };
            Poly lhs = phi_sym2_of_wedge43(mix(0), mix(1), mix(2));
            Poly rhs = determinant(g1) * determinant(g2) * poly_group_subst(phi, g1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("invariant pair on wedge^2(Aff^4) (x) Aff^3 (+) Aff^4") {
    // The middle component here has tau_0 blocks, not J blocks: that variant
    // reproduces all three published values at once (the J variant flips the
    // sign of every one of them).
    RatMat j1 = alt(4, {{1, 2, 1}});
    RatMat j2 = alt(4, {{1, 4, 1}, {2, 3, 1}});
    RatMat j3 = alt(4, {{3, 4, 1}});
    RatVec w0(4);
    w0[0] = Rat(1);
    w0[3] = Rat(1);

    auto [p1, p2] = p1_p2_433(j1, j2, j3, w0);
    CHECK(p1 == Rat(1));
    CHECK(p2 == Rat(1));

    Poly phi3 = phi3_433(j1, j2, j3);
    Poly expect(3);
    expect.add_term({1, 0, 1}, Rat(1));
    expect.add_term({0, 2, 0}, Rat(1));
    CHECK(phi3 == expect);

    CHECK(p1_433(j1, j2, j3, RatVec(4)) == Rat(0));

    SUBCASE("the J-block variant flips all three signs consistently") {
        RatMat j2j = alt(4, {{1, 4, 1}, {2, 3, -1}});
        auto [q1, q2] = p1_p2_433(j1, j2j, j3, w0);
        CHECK(q1 == Rat(-1));
        CHECK(q2 == Rat(-1));
        Poly m(3);
        m.add_term({1, 0, 1}, Rat(1));
        m.add_term({0, 2, 0}, Rat(-1));
        CHECK(phi3_433(j1, j2j, j3) == m);
    }
}

TEST_CASE("six-fold composition on Aff^3 (x) Aff^3 (x) Aff^2") {
    Cube332 x{};
    x[0][0][0] = Rat(1);
    x[1][1][0] = Rat(-1);
    x[1][1][1] = Rat(1);
    x[2][2][1] = Rat(-1);

    SUBCASE("middle map hits the symmetrization of the basis") {
        auto phi = phi_332(x);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    bool perm = (a != b && b != c && a != c);
                    CHECK(phi[a][b][c] == (perm ? Rat(1) : Rat(0)));
                }
    }

    SUBCASE("pairing with the wedge part") {
        std::array<Rat, 3> x1 = {Rat(1), Rat(-1), Rat(1)};
        CHECK(p2_332(x1, x) == Rat(1));
        std::array<Rat, 3> zero = {Rat(0), Rat(0), Rat(0)};
        CHECK(p2_332(zero, x) == Rat(0));
    }

    SUBCASE("degree-12 component") {
        CHECK(p1_332(x) == Rat(1));
    }
}

TEST_CASE("degree-6 invariant on Aff^3 (x) Aff^2 (x) Aff^2") {
    RatMat r1 = mat(2, 2, {-1, 0, 0, 1});
    RatMat r2 = mat(2, 2, {0, 1, 0, 0});
    RatMat r3 = mat(2, 2, {0, 0, 1, 0});
    CHECK(p_322(r1, r2, r3) == Rat(1));
    CHECK(p_322(r1, r1, r1) == Rat(0));

    SUBCASE("equivariance") {
        std::mt19937 rng(77);
        for (int t = 0; t < 6; ++t) {
            RatMat g1 = rnd_invertible(rng, 3);
            RatMat g2 = rnd_invertible(rng, 2);
            RatMat g3 = rnd_invertible(rng, 2);
            auto twist = [&](const RatMat& a) {
                RatMat out(2, 2);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        Rat acc;
                        for (int k = 0; k < 2; ++k)
                            for (int l = 0; l < 2; ++l) acc += g2(i, k) * a(k, l) * g3(j, l);
                        out(i, j) = acc;
                    }
                return out;
            };
            RatMat t1 = twist(r1), t2 = twist(r2), t3 = twist(r3);
            auto mix = [&](int i) {
                RatMat out(2, 2);
                const RatMat* comps[3] = {&t1, &t2, &t3};
                for (int d = 0; d < 3; ++d)
                    for (int r = 0; r < 2; ++r)
                        for (int c = 0; c < 2; ++c) out(r, c) += g1(i, d) * (*comps[d])(r, c);
                return out;
            };
            Rat chi = pow(determinant(g1), 2) * pow(determinant(g2), 3) * pow(determinant(g3), 3);
            CHECK(p_322(mix(0), mix(1), mix(2)) == chi * p_322(r1, r2, r3));
        }
    }
}

TEST_CASE("vector-against-wedge invariant of the mixed GL4 case") {
    RatMat a = mat(4, 2, {0, 1, 1, 0, 0, 1, 1, 0});
    RatMat b1 = alt(4, {{1, 2, 1}});
    RatMat b2 = alt(4, {{3, 4, 1}});
    CHECK(p1_42w42(a, b1, b2) == Rat(1));
}

TEST_CASE("wedge contractions") {
    SUBCASE("three-dimensional sign") {
        std::vector<WedgeTerm> A = {{0, {2, 3}, Rat(1)}};
        std::vector<WedgeTerm> B = {{0, {1}, Rat(1)}};
        auto out = wedge_pair(3, A, B);
        REQUIRE(out.size() == 1);
        CHECK(out.at({0, 0}) == Rat(1));
    }
    SUBCASE("contraction with a zero tensor vanishes") {
        std::vector<WedgeTerm> A = {{0, {2, 3}, Rat(1)}};
        CHECK(wedge_pair(3, A, {}).empty());
    }
    SUBCASE("mixed-case reference point contracts to diag(-1, 1)") {
        std::vector<WedgeTerm> A = {{0, {2, 3}, Rat(1)}};
        RatMat w1 = mat(2, 2, {-1, 0, 0, 1});
        RatMat w2 = mat(2, 2, {0, 1, 0, 0});
        RatMat w3 = mat(2, 2, {0, 0, 1, 0});
        std::vector<WedgeTerm> B;
        const RatMat* ws[3] = {&w1, &w2, &w3};
        for (int i = 0; i < 3; ++i)
            for (int e = 0; e < 4; ++e) {
                Rat c = (*ws[i])(e / 2, e % 2);
                if (!c.is_zero()) B.push_back({e, {i + 1}, c});
            }
        auto out = wedge_pair(3, A, B);
        CHECK(out.at({0, 0}) == Rat(-1));
        CHECK(out.at({0, 3}) == Rat(1));
        CHECK(out.size() == 2);
    }

    SUBCASE("wedge of two vectors against a two-form") {
        RatVec v1(4), v2(4);
        v1[0] = Rat(1);
        v2[2] = Rat(1);
        CHECK(wedge_vvb4(v1, v2, alt(4, {{1, 3, 1}, {2, 4, 1}})) == Rat(-1));
    }
}

TEST_CASE("homogeneity degrees by scalar substitution") {
    std::mt19937 rng(123);
    RatMat a1 = rnd_alt(rng, 5), a2 = rnd_alt(rng, 5), a3 = rnd_alt(rng, 5);
    Rat t(3, 2);
    auto scale = [&](const RatMat& m) {
        RatMat out(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = t * m(i, j);
        return out;
    };
    CHECK(p_wedge53(scale(a1), scale(a2), scale(a3)) == pow(t, 30) * p_wedge53(a1, a2, a3));

    RatMat b1 = rnd_alt(rng, 4), b2 = rnd_alt(rng, 4), b3 = rnd_alt(rng, 4);
    CHECK(p_wedge43(scale(b1), scale(b2), scale(b3)) == pow(t, 12) * p_wedge43(b1, b2, b3));

    RatMat c1 = rnd_invertible(rng, 2), c2 = rnd_invertible(rng, 2), c3 = rnd_invertible(rng, 2);
    CHECK(p_322(scale(c1), scale(c2), scale(c3)) == pow(t, 6) * p_322(c1, c2, c3));
}

TEST_CASE("recipe evaluation") {
    Basis basis(flagship_rep());
    auto recipes = load_recipes(kDataDir + "/recipes.json");
    auto reps = load_representatives(kDataDir + "/representatives.json", basis);
    CHECK(recipes.size() == 61);

    std::map<int, Recipe> by_index;
    for (const auto& r : recipes) by_index[r.beta_index] = r;

    int explicit_count = 0;
    for (const auto& r : recipes)
        if (!r.stub) ++explicit_count;
    CHECK(explicit_count >= 20);

    SUBCASE("published unit values at the representatives") {
        for (int i : {270, 285, 286, 289, 42, 291, 292, 273, 280, 281, 287}) {
            const auto& rec = by_index.at(i);
            REQUIRE(!rec.stub);
            auto res = eval_recipe(rec, reps.at(i));
            CHECK(res.pass);
            CHECK(res.combined == Rat(1));
        }
    }

    SUBCASE("all explicit recipes evaluate to their expected values") {
        for (const auto& rec : recipes) {
            if (rec.stub) continue;
            auto res = eval_recipe(rec, reps.at(rec.beta_index));
            INFO("stratum ", rec.beta_index);
            CHECK(res.pass);
        }
    }

    SUBCASE("unresolved primitive is reported") {
        Recipe bad;
        bad.beta_index = 1;
        RecipeOp op;
        op.name = "P";
        op.op = "no_such_primitive";
        bad.ops.push_back(op);
        bad.value = {{"P", 1}};
        bad.expected = Rat(1);
        Tensor x(basis);
        CHECK_THROWS_AS(eval_recipe(bad, x), std::invalid_argument);
    }
}
