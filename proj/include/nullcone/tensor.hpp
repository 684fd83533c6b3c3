#ifndef NULLCONE_TENSOR_HPP
#define NULLCONE_TENSOR_HPP

#include <map>

#include "nullcone/rep.hpp"

namespace nullcone {

// Coordinate lookup for a representation basis.
class Basis {
public:
    explicit Basis(const RepSpec& rep);

    const RepSpec& rep() const { return rep_; }
    const std::vector<Coordinate>& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }

    // Ordinal of a coordinate given per-slot sorted multi-indices.
    std::size_t ordinal(int summand, const std::vector<std::vector<int>>& indices) const;

private:
    RepSpec rep_;
    std::vector<Coordinate> coords_;
    std::map<std::pair<int, std::vector<std::vector<int>>>, std::size_t> index_;
};

// Dense rational element of a representation space.
struct Tensor {
    const Basis* basis = nullptr;
    std::vector<Rat> coeffs;

    explicit Tensor(const Basis& b) : basis(&b), coeffs(b.dim()) {}

    Rat& at(std::size_t ordinal) { return coeffs[ordinal - 1]; }
    const Rat& at(std::size_t ordinal) const { return coeffs[ordinal - 1]; }
    bool is_zero() const;

    // Adds c * (basis element), sorting wedge indices with sign; indices with
    // repeats contribute nothing.
    void add(int summand, std::vector<std::vector<int>> indices, const Rat& c);

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.coeffs == b.coeffs; }
};

// Sorts a wedge multi-index in place; returns the permutation sign, or 0 if
// an index repeats.
int wedge_sort(std::vector<int>& idx);

// Minor determinant det g[rows, cols] used by exterior-power transitions.
Rat minor_det(const RatMat& g, const std::vector<int>& rows, const std::vector<int>& cols);

// Action of (g_1, ..., g_r) on a tensor; g_j is n_j x n_j. Sub-block slots
// read the relevant rows/columns out of the full factor matrix, so g must
// preserve the block for the result to stay in the sub-representation.
Tensor apply_group(const std::vector<RatMat>& g, const Tensor& t);

}  // namespace nullcone

#endif
