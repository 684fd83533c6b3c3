#include "nullcone/substrata.hpp"

#include <algorithm>
#include <numeric>

namespace nullcone {

std::vector<WeylElement> weyl_elements(const GroupSpec& group) {
    std::vector<std::vector<std::vector<int>>> factor_perms;
    for (int n : group.factor_sizes) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> perms;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        factor_perms.push_back(std::move(perms));
    }
    std::vector<WeylElement> out;
    std::vector<std::size_t> pos(factor_perms.size(), 0);
    for (;;) {
        WeylElement w;
        for (std::size_t j = 0; j < factor_perms.size(); ++j) w.push_back(factor_perms[j][pos[j]]);
        out.push_back(std::move(w));
        std::size_t k = factor_perms.size();
        while (k-- > 0) {
            if (++pos[k] < factor_perms[k].size()) break;
            pos[k] = 0;
            if (k == 0) return out;
        }
    }
}

RatVec weyl_apply(const GroupSpec& group, const WeylElement& w, const RatVec& v) {
    RatVec out(v.dim());
    int pos = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        int n = group.factor_sizes[j];
        for (int i = 0; i < n; ++i) out[pos + i] = v[pos + w[j][i]];
        pos += n;
    }
    return out;
}

bool in_beta_chamber(const GroupSpec& group, const BlockCuts& blocks, const RatVec& v) {
    int pos = 0;
    for (int j = 0; j < group.num_factors(); ++j) {
        int n = group.factor_sizes[j];
        for (int i = 1; i < n; ++i)
            if (block_of(blocks[j], i) == block_of(blocks[j], i + 1) &&
                v[pos + i] < v[pos + i - 1])
                return false;
        pos += n;
    }
    return true;
}

RatVec beta_chamber_normalize(const GroupSpec& group, const BlockCuts& blocks, const RatVec& v) {
    RatVec out = v;
    int pos = 0;
    for (int j = 0; j < group.num_factors(); ++j) {
        int n = group.factor_sizes[j];
        int start = 1;
        auto sort_block = [&](int lo, int hi) {
            std::vector<Rat> vals;
            for (int i = lo; i <= hi; ++i) vals.push_back(out[pos + i - 1]);
            std::sort(vals.begin(), vals.end());
            for (int i = lo; i <= hi; ++i) out[pos + i - 1] = vals[i - lo];
        };
        for (int cut : blocks[j]) {
            sort_block(start, cut);
            start = cut + 1;
        }
        sort_block(start, n);
        pos += n;
    }
    return out;
}

std::set<RatVec> substrata_scan(const StratumData& stratum, const std::vector<BetaRecord>& frakB,
                                const WeightTable& weights) {
    // Scaled-integer inner loop: per table row, both vectors go on the
    // common grid lcm(d_row, d_beta), all filters run on int64/int128, and
    // only survivors are converted back to rationals.
    const GroupSpec& group = weights.rep.group;
    auto weyl = weyl_elements(group);
    const std::size_t dim = stratum.beta.dim();

    long db = common_denominator(stratum.beta).get_si();
    std::vector<long long> beta_scaled(dim);
    for (std::size_t c = 0; c < dim; ++c)
        beta_scaled[c] = (stratum.beta[c] * Rat(db)).num().get_si();

    std::set<std::vector<long long>> keys;  // reduced numerators + denominator
    std::vector<long long> row(dim), cand(dim);
    for (const auto& rec : frakB) {
        long dr = common_denominator(rec.beta).get_si();
        long L = std::lcm(dr, db);
        long long fr = L / dr, fb = L / db;
        for (std::size_t c = 0; c < dim; ++c)
            row[c] = (rec.beta[c] * Rat(dr)).num().get_si() * fr;
        std::vector<long long> bpov(dim);
        for (std::size_t c = 0; c < dim; ++c) bpov[c] = beta_scaled[c] * fb;
        for (const auto& w : weyl) {
            bool zero = true, chamber = true;
            int pos = 0;
            __int128 dot = 0;
            for (std::size_t j = 0; j < w.size() && chamber; ++j) {
                int n = group.factor_sizes[j];
                long long prev = 0;
                for (int i = 0; i < n; ++i) {
                    long long v = row[pos + w[j][i]] - bpov[pos + i];
                    cand[pos + i] = v;
                    if (v != 0) zero = false;
                    dot += static_cast<__int128>(v) * beta_scaled[pos + i];
                    if (i > 0 && block_of(stratum.blocks[j], i) == block_of(stratum.blocks[j], i + 1) &&
                        v < prev) {
                        chamber = false;
                        break;
                    }
                    prev = v;
                }
                pos += n;
            }
            if (!chamber || zero || dot != 0) continue;
            long long g = L;
            for (auto v : cand) g = std::gcd(g, v < 0 ? -v : v);
            std::vector<long long> key(dim + 1);
            for (std::size_t c = 0; c < dim; ++c) key[c] = cand[c] / g;
            key[dim] = L / g;
            keys.insert(std::move(key));
        }
    }
    std::set<RatVec> out;
    for (const auto& key : keys) {
        RatVec v(dim);
        for (std::size_t c = 0; c < dim; ++c) v[c] = Rat(key[c], key[dim]);
        out.insert(std::move(v));
    }
    return out;
}

namespace {

std::vector<std::vector<long long>> shifted_scaled_weights(const StratumData& stratum,
                                                           const WeightTable& weights) {
    mpz_class den = common_denominator(stratum.beta);
    long scale = std::lcm(weights.scale, den.get_si());
    std::vector<std::vector<long long>> pts;
    for (auto o : stratum.I) {
        const RatVec& g = weights.gamma[o - 1];
        std::vector<long long> row(g.dim());
        for (std::size_t c = 0; c < g.dim(); ++c) {
            Rat v = (g[c] - stratum.beta[c]) * Rat(scale);
            if (!v.is_integer()) throw std::logic_error("substrata: scaling failed");
            row[c] = v.num().get_si();
        }
        pts.push_back(std::move(row));
    }
    return pts;
}

std::set<RatVec> raw_candidates(const StratumData& stratum, const WeightTable& weights) {
    auto pts = shifted_scaled_weights(stratum, weights);
    mpz_class den = common_denominator(stratum.beta);
    long scale = std::lcm(weights.scale, den.get_si());
    auto raw = enumerate_min_norm_points(pts, tstar_dim(weights.rep.group), {});
    std::set<RatVec> out;
    for (const auto& rc : raw) {
        RatVec v(rc.num.size());
        for (std::size_t c = 0; c < rc.num.size(); ++c)
            v[c] = Rat(rc.num[c], rc.den) * Rat(1, scale);
        out.insert(std::move(v));
    }
    return out;
}

}  // namespace

std::set<RatVec> substrata_candidates_raw(const StratumData& stratum, const WeightTable& weights) {
    return raw_candidates(stratum, weights);
}

std::set<RatVec> substrata_direct(const StratumData& stratum, const WeightTable& weights) {
    std::set<RatVec> out;
    for (const auto& c : raw_candidates(stratum, weights))
        out.insert(beta_chamber_normalize(weights.rep.group, stratum.blocks, c));
    return out;
}

PropositionFlags proposition_applicability(const WeightTable& weights,
                                           const std::vector<BetaRecord>& frakB,
                                           const StratumData& stratum, const RatVec& beta_prime) {
    PropositionFlags flags;
    RatVec beta2 = stratum.beta + beta_prime;
    auto norm = chamber_normalize(weights.rep.group, beta2);
    flags.beta2_in_frakC = false;
    for (const auto& rec : frakB)
        if (rec.beta == norm.sorted) {
            flags.beta2_in_frakC = true;
            break;
        }
    StratumData s2;
    s2.beta = beta2;
    split_ZWY(beta2, weights, s2.I, s2.J);
    s2.blocks = mbeta_blocks(weights.rep.group, beta2);

    flags.z_contained = std::includes(stratum.I.begin(), stratum.I.end(), s2.I.begin(), s2.I.end());

    // M_{beta''} inside M_beta iff every cut of beta is also a cut of beta''
    flags.m_contained = true;
    for (std::size_t j = 0; j < stratum.blocks.size(); ++j)
        for (int cut : stratum.blocks[j])
            if (std::find(s2.blocks[j].begin(), s2.blocks[j].end(), cut) == s2.blocks[j].end())
                flags.m_contained = false;
    return flags;
}

}  // namespace nullcone
