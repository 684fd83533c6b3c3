#ifndef NULLCONE_INVARIANTS_HPP
#define NULLCONE_INVARIANTS_HPP

#include <array>

#include "nullcone/poly.hpp"

namespace nullcone {

// Discriminant of a homogeneous binary form of degree 2 or 3.
//   degree 2 (a v1^2 + b v1 v2 + c v2^2):        b^2 - 4ac
//   degree 3 (a v1^3 + b v1^2 v2 + c v1 v2^2 + d v2^3):
//              b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 a b c d
Rat disc_binary(const Poly& q, int degree);

// Discriminant of a quadratic form in n variables: det of the doubled Gram
// matrix, normalized to 1 at the split anchor form (u1 u3 + u2^2 for n = 3,
// v1 v4 - v2 v3 for n = 4; plain det for other arities).
Rat disc_quadratic_form(const Poly& q);

// The five principal sub-Pfaffians of a 5x5 alternating matrix, with
// alternating signs: Pf_i = (-1)^(i-1) Pf(minor omitting row/column i).
std::array<Poly, 5> sub_pfaffians_5(const PolyMatrix& x);

// --- invariants for GL5 x GL3 on wedge^2(Aff^5) (x) Aff^3 ----------------
// Components w1, w2, w3 are 5x5 alternating matrices; the pencil
// u1 w1 + u2 w2 + u3 w3 feeds the sub-Pfaffians. phi is the wedge of the
// five quadrics expressed against the dual of the monomial basis
// l1..l6 = u1^2, u1u2, u1u3, u2^2, u2u3, u3^2.
std::array<Rat, 6> phi_wedge53(const RatMat& w1, const RatMat& w2, const RatMat& w3);
Rat p_wedge53(const RatMat& w1, const RatMat& w2, const RatMat& w3);

// --- GL4 x GL3 on wedge^2(Aff^4) (x) Aff^3 -------------------------------
// Antisymmetrized triple contraction into quadratic forms on Aff^4.
Poly phi_sym2_of_wedge43(const RatMat& x1, const RatMat& x2, const RatMat& x3);
Rat p_wedge43(const RatMat& x1, const RatMat& x2, const RatMat& x3);

// --- GL4 x GL3 on wedge^2(Aff^4) (x) Aff^3 (+) Aff^4 ---------------------
Rat p1_433(const RatMat& x1, const RatMat& x2, const RatMat& x3, const RatVec& x0);
Poly phi3_433(const RatMat& x1, const RatMat& x2, const RatMat& x3);  // ternary quadric
Rat p2_433(const RatMat& x1, const RatMat& x2, const RatMat& x3);
std::pair<Rat, Rat> p1_p2_433(const RatMat& x1, const RatMat& x2, const RatMat& x3,
                              const RatVec& x0);

// --- GL3^2 x GL2 (x GL1) on wedge^2(Aff^3) (+) Aff^3 (x) Aff^3 (x) Aff^2 --
// x2[i][j][k]: Aff^3 (x) Aff^3 (x) Aff^2 entry. phi_332 is the equivariant
// image in (second Aff^3)^(x3); p2_332 pairs it with the wedge part
// x1 = a1 p12 + a2 p13 + a3 p23.
using Cube332 = std::array<std::array<std::array<Rat, 2>, 3>, 3>;
std::array<std::array<std::array<Rat, 3>, 3>, 3> phi_332(const Cube332& x2);
Rat p2_332(const std::array<Rat, 3>& x1, const Cube332& x2);
Rat p1_332(const Cube332& x2);  // degree 12: disc of det(v1 B1 + v2 B2)

// --- GL3 x GL2^2 on Aff^3 (x) Aff^2 (x) Aff^2 ----------------------------
// Degree 6, equivariant with (det g1)^2 (det g2)^3 (det g3)^3, normalized to
// value 1 at (diag(-1,1), E12, E21).
Rat p_322(const RatMat& a1, const RatMat& a2, const RatMat& a3);

// --- GL2^3 on Aff^2 (x) Aff^2 (x) Aff^2 ----------------------------------
Rat p_222(const RatMat& a1, const RatMat& a2);  // disc of det(v1 a1 + v2 a2)

// --- GL3^2 x GL2 on Aff^3 (x) Aff^3 (x) Aff^2 ----------------------------
Rat p_332(const RatMat& b1, const RatMat& b2);  // degree 12 disc of det pencil

// --- GL4 x GL2 on wedge^2(Aff^4) (x) Aff^2 -------------------------------
Rat p_wedge42(const RatMat& b1, const RatMat& b2);  // disc of Pfaffian pencil

// --- GL4 x GL2^2 on Aff^4 (x) Aff^2 (+) wedge^2(Aff^4) (x) Aff^2 ---------
// a: 4x2; b1, b2: 4x4 alternating. First invariant: discriminant of
// det(Phi1) where Phi1 pairs the vector part against the wedge part.
Rat p1_42w42(const RatMat& a, const RatMat& b1, const RatMat& b2);

// v1 ^ v2 ^ B for vectors v1, v2 in Aff^4 and B in wedge^2(Aff^4),
// against p_{1234} -> 1.
Rat wedge_vvb4(const RatVec& v1, const RatVec& v2, const RatMat& B);

// Bilinear contraction wedge^2(Aff^3) x Aff^3 -> wedge^3 ~ k:
// (a1 p12 + a2 p13 + a3 p23) ^ (b1 p1 + b2 p2 + b3 p3).
Rat wedge3_pair(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b);

// Generic wedge contraction V (x) wedge^m Aff^n  x  W (x) wedge^(n-m) Aff^n
// -> V (x) W with p_{1..n} -> 1.
struct WedgeTerm {
    int aux = 0;              // index into V (resp. W)
    std::vector<int> subset;  // strictly increasing wedge indices
    Rat c;
};
std::map<std::pair<int, int>, Rat> wedge_pair(int n, const std::vector<WedgeTerm>& a,
                                              const std::vector<WedgeTerm>& b);

}  // namespace nullcone

#endif
