#ifndef NULLCONE_SUBSTRATA_HPP
#define NULLCONE_SUBSTRATA_HPP

#include <set>

#include "nullcone/beta_enum.hpp"
#include "nullcone/strata.hpp"

namespace nullcone {

// One Weyl element: a permutation per factor; (w.beta)[i] = beta[perm[i]]
// within each factor's index range.
using WeylElement = std::vector<std::vector<int>>;

std::vector<WeylElement> weyl_elements(const GroupSpec& group);

RatVec weyl_apply(const GroupSpec& group, const WeylElement& w, const RatVec& v);

// Ascending within every Levi block of beta (the chamber extending the
// dominant chamber intersected with beta's wall).
bool in_beta_chamber(const GroupSpec& group, const BlockCuts& blocks, const RatVec& v);
RatVec beta_chamber_normalize(const GroupSpec& group, const BlockCuts& blocks, const RatVec& v);

// Candidates for the stratification of (M_beta, Z_beta) obtained by scanning
// w * beta''' - beta over the Weyl group and the full stratifying set,
// filtered by orthogonality to beta, chamber membership and nonvanishing.
std::set<RatVec> substrata_scan(const StratumData& stratum, const std::vector<BetaRecord>& frakB,
                                const WeightTable& weights);

// Direct computation: enumerate min-norm candidates of the shifted weights
// {gamma_i - beta : i in I_beta} and normalize into the block chamber.
std::set<RatVec> substrata_direct(const StratumData& stratum, const WeightTable& weights);

// Raw (un-normalized) candidate set of the shifted weights, used as the
// realizability filter for the scan.
std::set<RatVec> substrata_candidates_raw(const StratumData& stratum, const WeightTable& weights);

struct PropositionFlags {
    bool beta2_in_frakC = true;  // beta + beta' is a stratifying candidate
    bool z_contained = false;    // Z_{beta''} inside Z_beta
    bool m_contained = false;    // M_{beta''} inside M_beta
};

PropositionFlags proposition_applicability(const WeightTable& weights,
                                           const std::vector<BetaRecord>& frakB,
                                           const StratumData& stratum, const RatVec& beta_prime);

}  // namespace nullcone

#endif
