#ifndef NULLCONE_STRATA_HPP
#define NULLCONE_STRATA_HPP

#include <set>

#include "nullcone/beta_enum.hpp"
#include "nullcone/rep.hpp"

namespace nullcone {

// Per-factor partition into maximal runs of equal beta entries, stored as
// cut positions: cuts {2} on a size-5 factor means blocks {1,2},{3,4,5}.
using BlockCuts = std::vector<std::vector<int>>;

struct StratumData {
    RatVec beta;
    std::vector<long> lambda;        // primitive integral multiple of beta
    std::set<std::size_t> I;         // ordinals with (gamma, beta) = (beta, beta)
    std::set<std::size_t> J;         // ordinals with strict inequality
    BlockCuts blocks;
    std::vector<std::vector<long>> chi;  // det exponent per block, per factor
};

// Smallest positive rational multiple of beta that is an integral vector.
std::vector<long> lambda_of(const RatVec& beta);

// Exact comparison split of the coordinates into Z (equality) and W (strict).
void split_ZWY(const RatVec& beta, const WeightTable& weights,
               std::set<std::size_t>& I, std::set<std::size_t>& J);

// Maximal runs of equal entries within each factor; beta must be
// chamber-normalized for the cuts to match the parabolic notation.
BlockCuts mbeta_blocks(const GroupSpec& group, const RatVec& beta);

// Indivisible determinant-exponents of the Levi character: trivial on the
// central scalar torus, restricting to a positive multiple of beta.
std::vector<std::vector<long>> chi_exponents(const GroupSpec& group, const RatVec& beta,
                                             const BlockCuts& blocks);

StratumData stratum_data(const WeightTable& weights, const RatVec& beta);

// Block index (0-based) of a 1-based entry position within one factor.
int block_of(const std::vector<int>& cuts, int index);

}  // namespace nullcone

#endif
