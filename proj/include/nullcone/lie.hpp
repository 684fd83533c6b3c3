#ifndef NULLCONE_LIE_HPP
#define NULLCONE_LIE_HPP

#include "nullcone/tensor.hpp"

namespace nullcone {

// Derivative of the group action at the identity, applied to a fixed point:
// one column per elementary matrix E_{ab} of each factor, Lie(G)
// coordinatized as the concatenation of the n_j x n_j entry grids
// (row-major within each factor).
struct LieAction {
    RatMat L;  // dim V x dim Lie(G)
};

LieAction lie_action(const Tensor& w);

// Derivative along a single Lie algebra element X (one matrix per factor),
// via the Leibniz rule over tensor slots.
Tensor lie_derivative(const std::vector<RatMat>& X, const Tensor& w);

// dim ker of the Lie action = dim of the tangent space of the stabilizer.
long stabilizer_dim(const Tensor& w);

// Zariski-open orbit criterion: stabilizer dimension equals dim G - dim V.
bool open_orbit_certify(const Tensor& w);

// Independent derivation of the same columns through dual-number arithmetic:
// applies the full group element I + eps E_{ab} with eps^2 = 0 and takes the
// eps part. Used as a test oracle for small groups.
LieAction lie_action_dual_numbers(const Tensor& w);

struct FixtureTerm {
    int summand = 0;
    std::vector<std::vector<int>> indices;
    Rat coeff;
};

struct StabilizerFixture {
    std::string name;
    RepSpec rep;
    std::vector<FixtureTerm> terms;
    long expected_dim = 0;
};

std::vector<StabilizerFixture> load_stabilizer_fixtures(const std::string& path);

}  // namespace nullcone

#endif
