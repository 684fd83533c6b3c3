#ifndef NULLCONE_MINNORM_HPP
#define NULLCONE_MINNORM_HPP

#include "nullcone/rational.hpp"

namespace nullcone {

struct MinNormPoint {
    RatVec point;            // projection of the origin onto aff(S)
    std::vector<Rat> coeffs; // barycentric coefficients, input order, sum 1
};

// Projection of the origin onto the affine hull of S, solved exactly via the
// normal equations on difference vectors. Throws if S is empty or affinely
// dependent.
MinNormPoint min_norm_affine(const std::vector<RatVec>& S);

// Hull membership for an already-established barycentric combination:
// true iff every coefficient is >= 0.
bool in_hull(const std::vector<Rat>& coeffs);

// Same check, re-validating that p really is the stated combination of S
// with coefficients summing to one (throws otherwise).
bool in_hull(const RatVec& p, const std::vector<RatVec>& S, const std::vector<Rat>& coeffs);

}  // namespace nullcone

#endif
