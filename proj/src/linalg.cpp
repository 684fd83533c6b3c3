#include "nullcone/linalg.hpp"

namespace nullcone {

namespace {

// Fraction-free (Bareiss) forward elimination on an integer matrix, in place.
// Returns the pivot column of each eliminated row. Row scaling is by previous
// pivots only, so every intermediate entry is a minor of the input.
std::vector<std::size_t> bareiss(std::vector<std::vector<mpz_class>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_cols;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

// Clears denominators row by row so the elimination runs over the integers.
std::vector<std::vector<mpz_class>> to_integer_rows(const RatMat& A, const RatVec* b) {
    std::vector<std::vector<mpz_class>> m(A.rows());
    const std::size_t cols = A.cols() + (b ? 1 : 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        RatVec row(cols);
        for (std::size_t j = 0; j < A.cols(); ++j) row[j] = A(i, j);
        if (b) row[A.cols()] = (*b)[i];
        mpz_class d = common_denominator(row);
        m[i].resize(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Rat s = row[j] * Rat(d);
            m[i][j] = s.num();
        }
    }
    return m;
}

}  // namespace

std::size_t rank(const RatMat& A) {
    auto m = to_integer_rows(A, nullptr);
    return bareiss(m).size();
}

Rat determinant(const RatMat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant: not square");
    if (A.rows() == 0) return Rat(1);
    Rat scale(1);
    std::vector<std::vector<mpz_class>> m(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        RatVec row(A.cols());
        for (std::size_t j = 0; j < A.cols(); ++j) row[j] = A(i, j);
        mpz_class d = common_denominator(row);
        scale /= Rat(d);
        m[i].resize(A.cols());
        for (std::size_t j = 0; j < A.cols(); ++j) m[i][j] = (row[j] * Rat(d)).num();
    }
    // Track row swaps through a signed Bareiss run.
    int sign = 1;
    mpz_class prev = 1;
    const std::size_t n = A.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return Rat(sign) * Rat(m[n - 1][n - 1]) * scale;
}

std::optional<LinearSolution> solve(const RatMat& A, const RatVec& b) {
    if (A.rows() != b.dim()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = A.cols();
    auto m = to_integer_rows(A, &b);
    auto pivot_cols = bareiss(m);

    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivot_cols.empty() && pivot_cols.back() == n) return std::nullopt;

    const std::size_t r = pivot_cols.size();
    // Back-substitute the echelon form to RREF over Q.
    std::vector<std::vector<Rat>> rr(r, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= n; ++j) rr[i][j] = Rat(m[i][j]);
    for (std::size_t ii = r; ii-- > 0;) {
        const std::size_t pc = pivot_cols[ii];
        Rat inv = Rat(1) / rr[ii][pc];
        for (std::size_t j = pc; j <= n; ++j) rr[ii][j] *= inv;
        for (std::size_t k = 0; k < ii; ++k) {
            Rat f = rr[k][pc];
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j <= n; ++j) rr[k][j] -= f * rr[ii][j];
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    LinearSolution out;
    out.particular = RatVec(n);
    for (std::size_t i = 0; i < r; ++i) out.particular[pivot_cols[i]] = rr[i][n];

    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        RatVec k(n);
        k[j] = Rat(1);
        for (std::size_t i = 0; i < r; ++i) k[pivot_cols[i]] = -rr[i][j];
        out.kernel.push_back(std::move(k));
    }
    return out;
}

}  // namespace nullcone
