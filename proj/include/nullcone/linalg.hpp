#ifndef NULLCONE_LINALG_HPP
#define NULLCONE_LINALG_HPP

#include <optional>

#include "nullcone/rational.hpp"

namespace nullcone {

struct LinearSolution {
    RatVec particular;           // one solution of A x = b (free variables set to 0)
    std::vector<RatVec> kernel;  // basis of the null space, ordered by free column
};

// Exact solver for A x = b. Fraction-free (Bareiss) forward elimination,
// then reduction to RREF for a deterministic kernel basis: pivot columns
// ascending, one kernel vector per free column with unit entry there.
// Returns nullopt iff the system is inconsistent.
std::optional<LinearSolution> solve(const RatMat& A, const RatVec& b);

// Rank via fraction-free elimination.
std::size_t rank(const RatMat& A);

// Determinant (square matrices) via Bareiss.
Rat determinant(const RatMat& A);

}  // namespace nullcone

#endif
