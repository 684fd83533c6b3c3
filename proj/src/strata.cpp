#include "nullcone/strata.hpp"

#include <numeric>

namespace nullcone {

std::vector<long> lambda_of(const RatVec& beta) {
    if (beta.is_zero()) throw std::invalid_argument("lambda_of: zero vector");
    mpz_class den = common_denominator(beta);
    mpz_class g = 0;
    std::vector<mpz_class> scaled(beta.dim());
    for (std::size_t i = 0; i < beta.dim(); ++i) {
        scaled[i] = (beta[i] * Rat(den)).num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
    }
    std::vector<long> out(beta.dim());
    for (std::size_t i = 0; i < beta.dim(); ++i) {
        mpz_class v = scaled[i] / g;
        if (!v.fits_slong_p()) throw std::overflow_error("lambda_of: entry out of range");
        out[i] = v.get_si();
    }
    return out;
}

void split_ZWY(const RatVec& beta, const WeightTable& weights,
               std::set<std::size_t>& I, std::set<std::size_t>& J) {
    I.clear();
    J.clear();
    Rat nsq = inner(beta, beta);
    for (std::size_t i = 0; i < weights.gamma.size(); ++i) {
        Rat p = inner(weights.gamma[i], beta);
        if (p == nsq)
            I.insert(i + 1);
        else if (p > nsq)
            J.insert(i + 1);
    }
}

BlockCuts mbeta_blocks(const GroupSpec& group, const RatVec& beta) {
    BlockCuts cuts;
    int pos = 0;
    for (int n : group.factor_sizes) {
        std::vector<int> c;
        for (int i = 1; i < n; ++i)
            if (beta[pos + i - 1] != beta[pos + i]) c.push_back(i);
        cuts.push_back(std::move(c));
        pos += n;
    }
    return cuts;
}

int block_of(const std::vector<int>& cuts, int index) {
    int b = 0;
    for (int c : cuts) {
        if (index <= c) break;
        ++b;
    }
    return b;
}

std::vector<std::vector<long>> chi_exponents(const GroupSpec& group, const RatVec& beta,
                                             const BlockCuts& blocks) {
    // The character prod_b det(g_b)^{c_b} restricted to the torus is the
    // functional with value c_b on every entry of block b. Being trivial on
    // the scalar torus of each factor forces the per-factor shifts to vanish
    // (block sizes sum to n_j), so c is the minimal integral positive
    // multiple of beta's block values.
    std::vector<long> lam = lambda_of(beta);
    std::vector<std::vector<long>> chi;
    int pos = 0;
    for (std::size_t j = 0; j < group.factor_sizes.size(); ++j) {
        int n = group.factor_sizes[j];
        std::vector<long> c;
        int start = 1;
        auto push_block = [&](int lo, int hi) {
            // verify constant run
            for (int i = lo; i < hi; ++i)
                if (lam[pos + i - 1] != lam[pos + i])
                    throw std::logic_error("chi_exponents: blocks do not match beta");
            c.push_back(lam[pos + lo - 1]);
        };
        for (int cut : blocks[j]) {
            push_block(start, cut);
            start = cut + 1;
        }
        push_block(start, n);
        // triviality on the scalar torus of this factor
        long s = 0;
        int lo = 1;
        std::size_t bi = 0;
        for (int cut : blocks[j]) {
            s += c[bi++] * (cut - lo + 1);
            lo = cut + 1;
        }
        s += c[bi] * (n - lo + 1);
        if (s != 0) throw std::logic_error("chi_exponents: no integral solution");
        chi.push_back(std::move(c));
        pos += n;
    }
    // exponents are jointly indivisible
    long g = 0;
    for (const auto& f : chi)
        for (long v : f) g = std::gcd(g, v);
    if (g > 1)
        for (auto& f : chi)
            for (auto& v : f) v /= g;
    return chi;
}

StratumData stratum_data(const WeightTable& weights, const RatVec& beta) {
    StratumData s;
    s.beta = beta;
    s.lambda = lambda_of(beta);
    split_ZWY(beta, weights, s.I, s.J);
    s.blocks = mbeta_blocks(weights.rep.group, beta);
    s.chi = chi_exponents(weights.rep.group, beta, s.blocks);
    return s;
}

}  // namespace nullcone
