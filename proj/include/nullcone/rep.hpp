#ifndef NULLCONE_REP_HPP
#define NULLCONE_REP_HPP

#include <string>
#include <vector>

#include "nullcone/rational.hpp"

namespace nullcone {

// Product of general linear groups GL_{n_1} x ... x GL_{n_r}.
struct GroupSpec {
    std::vector<int> factor_sizes;

    int num_factors() const { return static_cast<int>(factor_sizes.size()); }
    int total_rank() const;  // sum of the n_j
    long dim() const;        // sum of the n_j^2
    int factor_offset(int factor) const;  // torus index offset of a 1-based factor
    void validate() const;
};

// One tensor slot of a summand: the d-th exterior power of the standard
// representation of the given factor, optionally of a diagonal sub-block
// [lo, hi] (1-based, inclusive). lo=1, hi=0 means the whole factor.
struct TensorFactor {
    int factor = 1;
    int degree = 1;
    int lo = 1;
    int hi = 0;

    int block_lo(const GroupSpec&) const { return lo; }
    int block_hi(const GroupSpec& g) const { return hi == 0 ? g.factor_sizes[factor - 1] : hi; }
};

struct Summand {
    std::vector<TensorFactor> factors;
};

// A direct sum of tensor products of exterior powers.
struct RepSpec {
    GroupSpec group;
    std::vector<Summand> summands;

    std::size_t dim() const;
    void validate() const;
};

// Basis coordinate: one strictly increasing multi-index per tensor slot.
struct Coordinate {
    int summand = 0;                         // 0-based summand index
    std::vector<std::vector<int>> indices;   // per tensor slot
    std::size_t ordinal = 0;                 // 1-based position in canonical order

    std::string label() const;  // e.g. "e_{121}" for the flagship numbering
};

// Canonical coordinate order: summand-major, then odometer order over the
// tensor slots with the first slot varying fastest (this reproduces the
// flagship numbering e_{121} -> 1, ..., e_{454} -> 40). Multi-indices within
// a slot are strictly increasing and enumerated lexicographically.
std::vector<Coordinate> enumerate_coordinates(const RepSpec& rep);

// Torus weight as an indicator count per torus index.
std::vector<long> raw_weight(const RepSpec& rep, const Coordinate& c);

// Per-factor mean-centred weight, lands in the sum-zero-per-block subspace.
RatVec tstar_weight(const RepSpec& rep, const Coordinate& c);

struct WeightTable {
    RepSpec rep;
    std::vector<Coordinate> coords;
    std::vector<std::vector<long>> raw;     // raw_weight per coordinate
    std::vector<RatVec> gamma;              // tstar_weight per coordinate
    long scale = 1;                         // scale * gamma is integral
    std::vector<std::vector<long long>> gamma_scaled;
};

WeightTable build_weight_table(const RepSpec& rep);

// The representation this library is ultimately about:
// GL5 x GL4 acting on wedge^2(Aff^5) (x) Aff^4.
RepSpec flagship_rep();

// Dimension of the sum-zero weight space for the group (sum of n_j - 1).
int tstar_dim(const GroupSpec& g);

}  // namespace nullcone

#endif
