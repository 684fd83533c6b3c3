#ifndef NULLCONE_BETA_ENUM_HPP
#define NULLCONE_BETA_ENUM_HPP

#include <functional>
#include <string>

#include "nullcone/rep.hpp"

namespace nullcone {

// A stratifying vector: the nonzero minimum-norm point of the convex hull of
// an affinely independent subset of weights, orthogonal to the hull.
struct BetaRecord {
    RatVec beta;
    Rat norm_sq;
    std::vector<std::size_t> witness;  // 1-based ordinals of the support subset
    bool chamber_normalized = false;
};

// All candidate points: projections of the origin onto affine hulls of
// affinely independent weight subsets that land inside the convex hull and
// are nonzero. Deduplicated by value; for each value the lexicographically
// smallest witness is kept. Output sorted by (norm_sq, entries).
struct EnumOptions {
    int threads = 1;
    std::string checkpoint_path;  // optional: plain-text partial dumps
    std::function<void(std::size_t done, std::size_t total)> progress;
};

std::vector<BetaRecord> candidate_betas(const WeightTable& weights,
                                        const EnumOptions& opts = {});

// Generic engine entry: integer weight rows (already scaled), max subset
// size. Exposed for the substrata module which enumerates shifted weights.
struct RawCandidate {
    std::vector<long long> num;  // reduced numerators
    long long den = 1;           // positive
    std::vector<std::size_t> witness;
};
std::vector<RawCandidate> enumerate_min_norm_points(
    const std::vector<std::vector<long long>>& pts, int max_size, const EnumOptions& opts = {});

// Per-factor ascending sort. Returns the Weyl element used as one
// permutation per factor; perm[j][i] is the source position (0-based, within
// the factor) of sorted entry i.
struct ChamberNormalization {
    RatVec sorted;
    std::vector<std::vector<int>> perms;
};
ChamberNormalization chamber_normalize(const GroupSpec& group, const RatVec& beta);

// The finite stratifying set: chamber-normalized, deduplicated candidates in
// canonical order (ascending norm, then lexicographic on entries).
std::vector<BetaRecord> compute_frakB(const RepSpec& rep, const EnumOptions& opts = {});

}  // namespace nullcone

#endif
