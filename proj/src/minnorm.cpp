#include "nullcone/minnorm.hpp"

#include "nullcone/linalg.hpp"

namespace nullcone {

MinNormPoint min_norm_affine(const std::vector<RatVec>& S) {
    if (S.empty()) throw std::invalid_argument("min_norm_affine: empty set");
    const std::size_t k = S.size() - 1;
    const RatVec& s0 = S[0];

    if (k == 0) return {s0, {Rat(1)}};

    // p = s0 + D y with D = [s1-s0, ..., sk-s0]; minimizing |p| gives
    // (D^T D) y = -D^T s0. Affine independence makes the Gram matrix
    // positive definite, hence a unique solution with empty kernel.
    RatMat gram(k, k);
    RatVec rhs(k);
    std::vector<RatVec> d;
    d.reserve(k);
    for (std::size_t i = 0; i < k; ++i) d.push_back(S[i + 1] - s0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            Rat g = inner(d[i], d[j]);
            gram(i, j) = g;
            gram(j, i) = g;
        }
        rhs[i] = -inner(d[i], s0);
    }
    auto sol = solve(gram, rhs);
    if (!sol || !sol->kernel.empty())
        throw std::invalid_argument("min_norm_affine: affinely dependent input");

    MinNormPoint out;
    out.point = s0;
    for (std::size_t i = 0; i < k; ++i) out.point += sol->particular[i] * d[i];
    out.coeffs.resize(k + 1);
    Rat c0(1);
    for (std::size_t i = 0; i < k; ++i) {
        out.coeffs[i + 1] = sol->particular[i];
        c0 -= sol->particular[i];
    }
    out.coeffs[0] = c0;
    return out;
}

bool in_hull(const std::vector<Rat>& coeffs) {
    for (const auto& c : coeffs)
        if (c.sign() < 0) return false;
    return true;
}

bool in_hull(const RatVec& p, const std::vector<RatVec>& S, const std::vector<Rat>& coeffs) {
    if (S.size() != coeffs.size()) throw std::invalid_argument("in_hull: arity mismatch");
    Rat total;
    RatVec combo(p.dim());
    for (std::size_t i = 0; i < S.size(); ++i) {
        combo += coeffs[i] * S[i];
        total += coeffs[i];
    }
    if (total != Rat(1) || combo != p)
        throw std::invalid_argument("in_hull: not a barycentric representation of p");
    return in_hull(coeffs);
}

}  // namespace nullcone
