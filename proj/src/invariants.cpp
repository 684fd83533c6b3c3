#include "nullcone/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "nullcone/linalg.hpp"
#include "nullcone/tensor.hpp"

namespace nullcone {

namespace {

Poly::Mono mono2(std::size_t arity, int i, int j) {
    Poly::Mono m(arity, 0);
    m[i] += 1;
    m[j] += 1;
    return m;
}

// Sign of the permutation sorting idx, 0 on repeats.
int perm_sign(std::vector<int> idx) { return wedge_sort(idx); }

}  // namespace

Rat disc_binary(const Poly& q, int degree) {
    if (q.arity() != 2 || !q.is_homogeneous(degree))
        throw std::invalid_argument("disc_binary: not a homogeneous binary form");
    if (degree == 2) {
        Rat a = q.coefficient({2, 0}), b = q.coefficient({1, 1}), c = q.coefficient({0, 2});
        return b * b - Rat(4) * a * c;
    }
    if (degree == 3) {
        Rat a = q.coefficient({3, 0}), b = q.coefficient({2, 1});
        Rat c = q.coefficient({1, 2}), d = q.coefficient({0, 3});
        return b * b * c * c - Rat(4) * a * c * c * c - Rat(4) * b * b * b * d -
               Rat(27) * a * a * d * d + Rat(18) * a * b * c * d;
    }
    throw std::invalid_argument("disc_binary: degree must be 2 or 3");
}

namespace {

Rat doubled_gram_det(const Poly& q) {
    const std::size_t n = q.arity();
    RatMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly::Mono m(n, 0);
        m[i] = 2;
        g(i, i) = Rat(2) * q.coefficient(m);
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat c = q.coefficient(mono2(n, i, j));
            g(i, j) = c;
            g(j, i) = c;
        }
    }
    return determinant(g);
}

}  // namespace

Rat disc_quadratic_form(const Poly& q) {
    if (!q.is_zero() && !q.is_homogeneous(2))
        throw std::invalid_argument("disc_quadratic_form: not quadratic");
    const std::size_t n = q.arity();
    Rat d = doubled_gram_det(q);
    if (n == 3) {
        // anchor u1 u3 + u2^2
        Poly anchor(3);
        anchor.add_term({1, 0, 1}, Rat(1));
        anchor.add_term({0, 2, 0}, Rat(1));
        return d / doubled_gram_det(anchor);
    }
    if (n == 4) {
        // anchor v1 v4 - v2 v3
        Poly anchor(4);
        anchor.add_term({1, 0, 0, 1}, Rat(1));
        anchor.add_term({0, 1, 1, 0}, Rat(-1));
        return d / doubled_gram_det(anchor);
    }
    return d;
}

std::array<Poly, 5> sub_pfaffians_5(const PolyMatrix& x) {
    if (x.size() != 5) throw std::invalid_argument("sub_pfaffians_5: need a 5x5 matrix");
    if (!x.is_alternating()) throw std::invalid_argument("sub_pfaffians_5: not alternating");
    std::array<Poly, 5> out;
    for (std::size_t i = 0; i < 5; ++i) {
        Poly p = pfaffian(x.minor_without({i}));
        out[i] = (i % 2 == 0) ? p : -p;
    }
    return out;
}

namespace {

PolyMatrix pencil(const std::vector<const RatMat*>& mats) {
    const std::size_t n = mats[0]->rows();
    PolyMatrix m(n, mats.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly e(mats.size());
            for (std::size_t k = 0; k < mats.size(); ++k) {
                Poly::Mono mo(mats.size(), 0);
                mo[k] = 1;
                e.add_term(mo, (*mats[k])(i, j));
            }
            m(i, j) = e;
        }
    return m;
}

}  // namespace

std::array<Rat, 6> phi_wedge53(const RatMat& w1, const RatMat& w2, const RatMat& w3) {
    PolyMatrix x = pencil({&w1, &w2, &w3});
    auto pf = sub_pfaffians_5(x);
    // coefficient matrix rows = Pfaffians, columns = l1..l6 monomials
    static const Poly::Mono L[6] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    RatMat m(5, 6);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 6; ++j) m(i, j) = pf[i].coefficient(L[j]);
    // wedge of five vectors in the six-dimensional space, against the dual
    // basis with alternating signs: y_j = (-1)^(j-1) det(m minus column j)
    std::array<Rat, 6> y;
    for (std::size_t j = 0; j < 6; ++j) {
        RatMat sub(5, 5);
        std::size_t cc = 0;
        for (std::size_t c = 0; c < 6; ++c) {
            if (c == j) continue;
            for (std::size_t r = 0; r < 5; ++r) sub(r, cc) = m(r, c);
            ++cc;
        }
        Rat d = determinant(sub);
        y[j] = (j % 2 == 0) ? d : -d;
    }
    return y;
}

Rat p_wedge53(const RatMat& w1, const RatMat& w2, const RatMat& w3) {
    auto y = phi_wedge53(w1, w2, w3);
    RatMat s(3, 3);
    s(0, 0) = y[0]; s(0, 1) = y[1]; s(0, 2) = y[2];
    s(1, 0) = y[1]; s(1, 1) = y[3]; s(1, 2) = y[4];
    s(2, 0) = y[2]; s(2, 1) = y[4]; s(2, 2) = y[5];
    return -determinant(s);
}

Poly phi_sym2_of_wedge43(const RatMat& x1, const RatMat& x2, const RatMat& x3) {
    const RatMat* xs[3] = {&x1, &x2, &x3};
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const int signs[6] = {1, -1, -1, 1, 1, -1};
    Poly acc(4);
    // iota(x) = sum over ordered pairs (i, j), i != j of x_{ij} e_i (x) e_j.
    for (int s = 0; s < 6; ++s) {
        const RatMat& A = *xs[perms[s][0]];
        const RatMat& B = *xs[perms[s][1]];
        const RatMat& C = *xs[perms[s][2]];
        for (int i1 = 0; i1 < 4; ++i1)
            for (int j1 = 0; j1 < 4; ++j1) {
                if (i1 == j1 || A(i1, j1).is_zero()) continue;
                for (int i2 = 0; i2 < 4; ++i2)
                    for (int j2 = 0; j2 < 4; ++j2) {
                        if (i2 == j2 || B(i2, j2).is_zero()) continue;
                        for (int i3 = 0; i3 < 4; ++i3)
                            for (int j3 = 0; j3 < 4; ++j3) {
                                if (i3 == j3 || C(i3, j3).is_zero()) continue;
                                // Phi1(a1..a6) = (a1 ^ a2 ^ a3 ^ a5) a4 a6
                                int w = perm_sign({i1 + 1, j1 + 1, i2 + 1, i3 + 1});
                                if (w == 0) continue;
                                Rat coeff = Rat(signs[s] * w) * A(i1, j1) * B(i2, j2) * C(i3, j3);
                                acc.add_term(mono2(4, j2, j3), coeff);
                            }
                    }
            }
    }
    return Rat(1, 12) * acc;
}

Rat p_wedge43(const RatMat& x1, const RatMat& x2, const RatMat& x3) {
    return disc_quadratic_form(phi_sym2_of_wedge43(x1, x2, x3));
}

namespace {

// a ^ p_i ^ x0 for a in wedge^2(Aff^4), against p_{1234} -> 1.
Rat wedge4_scalar(const RatMat& a, int i, const RatVec& x0) {
    Rat acc;
    for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) {
            if (a(k, l).is_zero()) continue;
            for (int m = 0; m < 4; ++m) {
                if (x0[m].is_zero()) continue;
                int s = perm_sign({k + 1, l + 1, i + 1, m + 1});
                if (s == 0) continue;
                acc += Rat(s) * a(k, l) * x0[m];
            }
        }
    return acc;
}

}  // namespace

Rat p1_433(const RatMat& x1, const RatMat& x2, const RatMat& x3, const RatVec& x0) {
    const RatMat* xs[3] = {&x1, &x2, &x3};
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const int signs[6] = {1, -1, -1, 1, 1, -1};
    Rat acc;
    for (int s = 0; s < 6; ++s) {
        const RatMat& A = *xs[perms[s][0]];
        const RatMat& B = *xs[perms[s][1]];
        const RatMat& C = *xs[perms[s][2]];
        // Phi_{2,x0}(A (x) B (x) (p_i ^ p_j)) summed over the terms of C
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (C(i, j).is_zero()) continue;
                Rat t = wedge4_scalar(A, i, x0) * wedge4_scalar(B, j, x0) -
                        wedge4_scalar(A, j, x0) * wedge4_scalar(B, i, x0);
                acc += Rat(signs[s]) * C(i, j) * t;
            }
    }
    return Rat(-1, 6) * acc;
}

Poly phi3_433(const RatMat& x1, const RatMat& x2, const RatMat& x3) {
    return pfaffian(pencil({&x1, &x2, &x3}));
}

Rat p2_433(const RatMat& x1, const RatMat& x2, const RatMat& x3) {
    return disc_quadratic_form(phi3_433(x1, x2, x3));
}

std::pair<Rat, Rat> p1_p2_433(const RatMat& x1, const RatMat& x2, const RatMat& x3,
                              const RatVec& x0) {
    return {p1_433(x1, x2, x3, x0), p2_433(x1, x2, x3)};
}

std::array<std::array<std::array<Rat, 3>, 3>, 3> phi_332(const Cube332& x) {
    // D[(j1,k1)][(j2,k2)][(j3,k3)] = sum over permutations of the first slot.
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const int signs[6] = {1, -1, -1, 1, 1, -1};
    auto D = [&](int j1, int k1, int j2, int k2, int j3, int k3) {
        Rat acc;
        for (int s = 0; s < 6; ++s) {
            acc += Rat(signs[s]) * x[perms[s][0]][j1][k1] * x[perms[s][1]][j2][k2] *
                   x[perms[s][2]][j3][k3];
        }
        return acc;
    };
    // cache the 216 entries
    std::vector<Rat> cache(6 * 6 * 6);
    auto at = [&](int a, int b, int c) -> Rat& { return cache[(a * 6 + b) * 6 + c]; };
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                at(a, b, c) = D(a / 2, a % 2, b / 2, b % 2, c / 2, c % 2);

    auto eps2 = [](int k, int kp) { return k == kp ? 0 : (k < kp ? 1 : -1); };

    std::array<std::array<std::array<Rat, 3>, 3>, 3> out;
    for (auto& p : out)
        for (auto& q : p) q = {Rat(0), Rat(0), Rat(0)};

    for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = 0; j2 < 3; ++j2)
            for (int j4 = 0; j4 < 3; ++j4) {
                int e3 = perm_sign({j1 + 1, j2 + 1, j4 + 1});
                if (e3 == 0) continue;
                for (int j3 = 0; j3 < 3; ++j3)
                    for (int j5 = 0; j5 < 3; ++j5)
                        for (int j6 = 0; j6 < 3; ++j6) {
                            Rat acc;
                            for (int k1 = 0; k1 < 2; ++k1)
                                for (int k2 = 0; k2 < 2; ++k2)
                                    for (int k3 = 0; k3 < 2; ++k3)
                                        for (int k4 = 0; k4 < 2; ++k4) {
                                            if (eps2(k1, k4) == 0) continue;
                                            for (int k5 = 0; k5 < 2; ++k5) {
                                                if (eps2(k2, k5) == 0) continue;
                                                for (int k6 = 0; k6 < 2; ++k6) {
                                                    int e = eps2(k1, k4) * eps2(k2, k5) * eps2(k3, k6);
                                                    if (e == 0) continue;
                                                    acc += Rat(e) *
                                                           at(j1 * 2 + k1, j2 * 2 + k2, j3 * 2 + k3) *
                                                           at(j4 * 2 + k4, j5 * 2 + k5, j6 * 2 + k6);
                                                }
                                            }
                                        }
                            if (!acc.is_zero()) out[j3][j5][j6] += Rat(-e3) * acc;
                        }
            }
    return out;
}

Rat p2_332(const std::array<Rat, 3>& x1, const Cube332& x2) {
    auto phi = phi_332(x2);
    // x1 ^ q_j against q_123 -> 1: (a3, -a2, a1)
    std::array<Rat, 3> pair = {x1[2], -x1[1], x1[0]};
    Rat acc;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                if (phi[a][b][c].is_zero()) continue;
                acc += phi[a][b][c] * pair[a] * pair[b] * pair[c];
            }
    return Rat(1, 6) * acc;
}

namespace {

RatMat cube_slice(const Cube332& x, int k) {
    RatMat m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = x[i][j][k];
    return m;
}

}  // namespace

Rat p1_332(const Cube332& x2) {
    return p_332(cube_slice(x2, 0), cube_slice(x2, 1));
}

Rat p_332(const RatMat& b1, const RatMat& b2) {
    return disc_binary(det_poly(pencil({&b1, &b2})), 3);
}

Rat p_222(const RatMat& a1, const RatMat& a2) {
    return disc_binary(det_poly(pencil({&a1, &a2})), 2);
}

Rat p_322(const RatMat& a1, const RatMat& a2, const RatMat& a3) {
    // disc of the ternary quadric det(u1 a1 + u2 a2 + u3 a3); the overall
    // sign is pinned by value 1 at (diag(-1,1), E12, E21).
    return -disc_quadratic_form(det_poly(pencil({&a1, &a2, &a3})));
}

Rat p_wedge42(const RatMat& b1, const RatMat& b2) {
    return disc_binary(pfaffian(pencil({&b1, &b2})), 2);
}

Rat p1_42w42(const RatMat& a, const RatMat& b1, const RatMat& b2) {
    // Phi1(x)(u): 2x2 matrix over (c_index, d_index), entries linear in the
    // dual coordinates u1..u4 via p_i ^ (wedge part) against
    // p_{234}, -p_{134}, p_{124}, -p_{123}.
    const RatMat* bs[2] = {&b1, &b2};
    PolyMatrix phi(2, 4);
    for (int ai = 0; ai < 2; ++ai)
        for (int bi = 0; bi < 2; ++bi) {
            Poly e(4);
            for (int i = 0; i < 4; ++i) {
                if (a(i, ai).is_zero()) continue;
                const RatMat& B = *bs[bi];
                for (int k = 0; k < 4; ++k)
                    for (int l = k + 1; l < 4; ++l) {
                        if (B(k, l).is_zero()) continue;
                        // p_i ^ p_k ^ p_l = sign * p_(sorted); missing index m
                        std::vector<int> idx = {i + 1, k + 1, l + 1};
                        int s = perm_sign(idx);
                        if (s == 0) continue;
                        int m = 1 + 2 + 3 + 4 - idx[0] - idx[1] - idx[2];
                        int dual_sign = (m % 2 == 1) ? 1 : -1;  // p_{234}->+u1, ...
                        Poly::Mono mo(4, 0);
                        mo[m - 1] = 1;
                        e.add_term(mo, Rat(s * dual_sign) * a(i, ai) * B(k, l));
                    }
            }
            phi(ai, bi) = e;
        }
    return disc_quadratic_form(det_poly(phi));
}

Rat wedge_vvb4(const RatVec& v1, const RatVec& v2, const RatMat& B) {
    Rat acc;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j || v1[i].is_zero() || v2[j].is_zero()) continue;
            for (int k = 0; k < 4; ++k)
                for (int l = k + 1; l < 4; ++l) {
                    if (B(k, l).is_zero()) continue;
                    int s = perm_sign({i + 1, j + 1, k + 1, l + 1});
                    if (s == 0) continue;
                    acc += Rat(s) * v1[i] * v2[j] * B(k, l);
                }
        }
    return acc;
}

Rat wedge3_pair(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    // (a1 p12 + a2 p13 + a3 p23) ^ (b1 p1 + b2 p2 + b3 p3)
    return a[0] * b[2] - a[1] * b[1] + a[2] * b[0];
}

std::map<std::pair<int, int>, Rat> wedge_pair(int n, const std::vector<WedgeTerm>& a,
                                              const std::vector<WedgeTerm>& b) {
    std::map<std::pair<int, int>, Rat> out;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            std::vector<int> idx = ta.subset;
            idx.insert(idx.end(), tb.subset.begin(), tb.subset.end());
            if (static_cast<int>(idx.size()) != n)
                throw std::invalid_argument("wedge_pair: degrees do not add to n");
            int s = perm_sign(idx);
            if (s == 0) continue;
            Rat v = Rat(s) * ta.c * tb.c;
            if (!v.is_zero()) {
                auto& slot = out[{ta.aux, tb.aux}];
                slot += v;
                if (slot.is_zero()) out.erase({ta.aux, tb.aux});
            }
        }
    return out;
}

}  // namespace nullcone
