#include "nullcone/rep.hpp"

#include <numeric>
#include <stdexcept>

namespace nullcone {

int GroupSpec::total_rank() const {
    return std::accumulate(factor_sizes.begin(), factor_sizes.end(), 0);
}

long GroupSpec::dim() const {
    long d = 0;
    for (int n : factor_sizes) d += static_cast<long>(n) * n;
    return d;
}

int GroupSpec::factor_offset(int factor) const {
    int off = 0;
    for (int j = 0; j < factor - 1; ++j) off += factor_sizes[j];
    return off;
}

void GroupSpec::validate() const {
    if (factor_sizes.empty()) throw std::invalid_argument("GroupSpec: no factors");
    for (int n : factor_sizes)
        if (n < 1) throw std::invalid_argument("GroupSpec: factor size < 1");
}

std::size_t RepSpec::dim() const {
    std::size_t total = 0;
    for (const auto& s : summands) {
        std::size_t d = 1;
        for (const auto& f : s.factors) {
            int m = f.block_hi(group) - f.block_lo(group) + 1;
            // C(m, degree)
            std::size_t binom = 1;
            for (int i = 0; i < f.degree; ++i) binom = binom * (m - i) / (i + 1);
            d *= binom;
        }
        total += d;
    }
    return total;
}

void RepSpec::validate() const {
    group.validate();
    for (const auto& s : summands) {
        if (s.factors.empty()) throw std::invalid_argument("RepSpec: empty summand");
        for (const auto& f : s.factors) {
            if (f.factor < 1 || f.factor > group.num_factors())
                throw std::invalid_argument("RepSpec: bad factor index");
            int m = f.block_hi(group) - f.block_lo(group) + 1;
            if (f.lo < 1 || f.block_hi(group) > group.factor_sizes[f.factor - 1] || m < 1)
                throw std::invalid_argument("RepSpec: bad sub-block");
            if (f.degree < 1 || f.degree > m)
                throw std::invalid_argument("RepSpec: bad exterior degree");
        }
    }
}

std::string Coordinate::label() const {
    std::string s = "e_{";
    for (const auto& idx : indices)
        for (int i : idx) s += std::to_string(i);
    return s + "}";
}

namespace {

// Strictly increasing d-subsets of [lo, hi], lexicographic.
std::vector<std::vector<int>> subsets_of_range(int lo, int hi, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d);
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == d) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= hi - (d - pos - 1); ++v) {
            cur[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    if (d == 0)
        out.push_back({});
    else
        rec(rec, 0, lo);
    return out;
}

}  // namespace

std::vector<Coordinate> enumerate_coordinates(const RepSpec& rep) {
    rep.validate();
    std::vector<Coordinate> out;
    std::size_t ordinal = 1;
    for (std::size_t s = 0; s < rep.summands.size(); ++s) {
        const auto& factors = rep.summands[s].factors;
        std::vector<std::vector<std::vector<int>>> choices;
        for (const auto& f : factors)
            choices.push_back(subsets_of_range(f.block_lo(rep.group), f.block_hi(rep.group), f.degree));
        // Odometer with the first slot fastest.
        std::vector<std::size_t> pos(factors.size(), 0);
        while (true) {
            Coordinate c;
            c.summand = static_cast<int>(s);
            for (std::size_t k = 0; k < factors.size(); ++k) c.indices.push_back(choices[k][pos[k]]);
            c.ordinal = ordinal++;
            out.push_back(std::move(c));
            std::size_t k = 0;
            while (k < factors.size()) {
                if (++pos[k] < choices[k].size()) break;
                pos[k] = 0;
                ++k;
            }
            if (k == factors.size()) break;
        }
    }
    return out;
}

std::vector<long> raw_weight(const RepSpec& rep, const Coordinate& c) {
    std::vector<long> w(rep.group.total_rank(), 0);
    const auto& factors = rep.summands[c.summand].factors;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        int off = rep.group.factor_offset(factors[k].factor);
        for (int i : c.indices[k]) w[off + i - 1] += 1;
    }
    return w;
}

RatVec tstar_weight(const RepSpec& rep, const Coordinate& c) {
    auto raw = raw_weight(rep, c);
    RatVec g(raw.size());
    int pos = 0;
    for (int n : rep.group.factor_sizes) {
        long sum = 0;
        for (int i = 0; i < n; ++i) sum += raw[pos + i];
        for (int i = 0; i < n; ++i) g[pos + i] = Rat(raw[pos + i]) - Rat(sum, n);
        pos += n;
    }
    return g;
}

WeightTable build_weight_table(const RepSpec& rep) {
    WeightTable t;
    t.rep = rep;
    t.coords = enumerate_coordinates(rep);
    long scale = 1;
    for (int n : rep.group.factor_sizes) scale = std::lcm(scale, static_cast<long>(n));
    t.scale = scale;
    for (const auto& c : t.coords) {
        t.raw.push_back(raw_weight(rep, c));
        t.gamma.push_back(tstar_weight(rep, c));
        std::vector<long long> sc(t.gamma.back().dim());
        for (std::size_t i = 0; i < sc.size(); ++i) {
            Rat v = t.gamma.back()[i] * Rat(scale);
            if (!v.is_integer()) throw std::logic_error("weight scale mismatch");
            sc[i] = v.num().get_si();
        }
        t.gamma_scaled.push_back(std::move(sc));
    }
    return t;
}

RepSpec flagship_rep() {
    RepSpec r;
    r.group.factor_sizes = {5, 4};
    Summand s;
    s.factors.push_back({1, 2, 1, 0});
    s.factors.push_back({2, 1, 1, 0});
    r.summands.push_back(s);
    return r;
}

int tstar_dim(const GroupSpec& g) {
    int d = 0;
    for (int n : g.factor_sizes) d += n - 1;
    return d;
}

}  // namespace nullcone
