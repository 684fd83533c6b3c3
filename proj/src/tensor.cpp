#include "nullcone/tensor.hpp"

#include <algorithm>

#include "nullcone/linalg.hpp"

namespace nullcone {

Basis::Basis(const RepSpec& rep) : rep_(rep), coords_(enumerate_coordinates(rep)) {
    for (const auto& c : coords_) index_[{c.summand, c.indices}] = c.ordinal;
}

std::size_t Basis::ordinal(int summand, const std::vector<std::vector<int>>& indices) const {
    auto it = index_.find({summand, indices});
    if (it == index_.end()) throw std::invalid_argument("Basis: no such coordinate");
    return it->second;
}

bool Tensor::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

int wedge_sort(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    return sign;
}

void Tensor::add(int summand, std::vector<std::vector<int>> indices, const Rat& c) {
    int sign = 1;
    for (auto& idx : indices) {
        int s = wedge_sort(idx);
        if (s == 0) return;
        sign *= s;
    }
    std::size_t o = basis->ordinal(summand, indices);
    coeffs[o - 1] += Rat(sign) * c;
}

Rat minor_det(const RatMat& g, const std::vector<int>& rows, const std::vector<int>& cols) {
    const std::size_t d = rows.size();
    if (d == 1) return g(rows[0] - 1, cols[0] - 1);
    if (d == 2)
        return g(rows[0] - 1, cols[0] - 1) * g(rows[1] - 1, cols[1] - 1) -
               g(rows[0] - 1, cols[1] - 1) * g(rows[1] - 1, cols[0] - 1);
    RatMat m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = g(rows[i] - 1, cols[j] - 1);
    return determinant(m);
}

Tensor apply_group(const std::vector<RatMat>& g, const Tensor& t) {
    const Basis& basis = *t.basis;
    const RepSpec& rep = basis.rep();
    if (g.size() != rep.group.factor_sizes.size())
        throw std::invalid_argument("apply_group: wrong number of factors");
    Tensor out(basis);
    const auto& coords = basis.coords();
    for (std::size_t in = 0; in < coords.size(); ++in) {
        if (t.coeffs[in].is_zero()) continue;
        const Coordinate& ci = coords[in];
        const auto& factors = rep.summands[ci.summand].factors;
        for (std::size_t on = 0; on < coords.size(); ++on) {
            const Coordinate& co = coords[on];
            if (co.summand != ci.summand) continue;
            Rat coeff = t.coeffs[in];
            for (std::size_t k = 0; k < factors.size() && !coeff.is_zero(); ++k) {
                coeff *= minor_det(g[factors[k].factor - 1], co.indices[k], ci.indices[k]);
            }
            if (!coeff.is_zero()) out.coeffs[on] += coeff;
        }
    }
    return out;
}

}  // namespace nullcone
