#include "nullcone/beta_enum.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <numeric>

#include "nullcone/linalg.hpp"
#include "nullcone/minnorm.hpp"

namespace nullcone {

namespace {

using i128 = __int128;

struct Overflow {};

// Stored values are kept below 2^62 in magnitude, so any product of two of
// them fits comfortably in int128 and short sums of such products cannot
// wrap. One comparison per stored value replaces per-operation checks.
constexpr i128 kStoreLimit = i128(1) << 62;

inline i128 checked(i128 v) {
    if (v >= kStoreLimit || v <= -kStoreLimit) throw Overflow{};
    return v;
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

using CandidateMap = std::map<std::vector<long long>, std::vector<std::size_t>>;

// Fraction-free incremental projection state along one DFS path.
//
// For the selected points s_0..s_m the state holds the Bareiss-triangularized
// Gram matrix of the difference vectors d_i = w_{s_i} - w_{s_0} plus the
// correspondingly transformed right-hand side of (D^T D) y = -D^T w_{s_0}.
// All entries are minors of the integer Gram, so updates stay in Z; any
// int128 overflow falls back to full-precision rationals for the subtree.
class PathState {
public:
    PathState(const std::vector<std::vector<long long>>& pts, int max_size)
        : pts_(pts), n_(pts.size()) {
        for (const auto& row : pts)
            for (long long v : row)
                if (v >= (1LL << 26) || v <= -(1LL << 26)) throw Overflow{};
        // Common content of all pairwise differences. Dividing it out of the
        // difference vectors keeps the Gram minors small: for weight tables
        // whose raw weights are congruent modulo a large scale (the flagship
        // differences are all multiples of 20) this tames the growth of the
        // fraction-free pivots by a factor of content^(2*depth).
        long long g = 0;
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t c = 0; c < pts[i].size(); ++c)
                g = std::gcd(g, pts[i][c] - pts[0][c]);
        content_ = g == 0 ? 1 : g;
        dots_.assign(n_ * n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) {
                i128 acc = 0;
                for (std::size_t c = 0; c < pts[i].size(); ++c)
                    acc += i128(pts[i][c]) * pts[j][c];
                dots_[i * n_ + j] = dots_[j * n_ + i] = checked(acc);
            }
        U_.assign(max_size, std::vector<i128>(max_size, 0));
        rhs_.assign(max_size, 0);
        z_.assign(max_size, 0);
        col_.assign(max_size, 0);
    }

    // Attempts to extend the current subset by point q. Returns false when
    // the extended set is affinely dependent (state unchanged). Throws
    // Overflow when int128 is insufficient.
    bool push(std::size_t q) {
        const std::size_t m = sel_.size();
        if (m == 0) {
            sel_.push_back(q);
            return true;
        }
        const std::size_t j = m - 1;  // new difference index
        std::size_t s0 = sel_[0];
        auto& col = col_;
        for (std::size_t t = 0; t <= j; ++t) {
            std::size_t st = (t == j) ? q : sel_[t + 1];
            col[t] = gram_entry(st, q, s0);
        }
        i128 rc = (dot(s0, s0) - dot(q, s0)) / content_;  // -(d_j . w_{s0})
        i128 prev = 1;
        for (std::size_t i = 0; i < j; ++i) {
            for (std::size_t t = i + 1; t <= j; ++t) {
                i128 uit = (t == j) ? col[i] : U_[i][t];
                col[t] = checked((U_[i][i] * col[t] - uit * col[i]) / prev);
            }
            rc = checked((U_[i][i] * rc - col[i] * rhs_[i]) / prev);
            prev = U_[i][i];
        }
        if (col[j] == 0) return false;  // affinely dependent
        for (std::size_t t = 0; t < j; ++t) U_[t][j] = col[t];
        U_[j][j] = col[j];
        rhs_[j] = rc;
        sel_.push_back(q);
        return true;
    }

    void pop() { sel_.pop_back(); }

    const std::vector<std::size_t>& selection() const { return sel_; }

    // Evaluates the current node: solves for the barycentric coefficients
    // and the squared norm of the projection point, all scaled by the
    // positive determinant of the Gram matrix (the last pivot).
    struct Eval {
        bool zero_point = false;
        bool in_hull = false;
        std::vector<long long> key;  // set when in_hull and nonzero
    };

    Eval evaluate() {
        Eval ev;
        const std::size_t m = sel_.size();
        const std::size_t k = m - 1;  // number of differences
        const std::size_t s0 = sel_[0];
        // With content-reduced differences D~ = D / g the system reads
        // (D~^T D~) y~ = -D~^T w0 and y = y~ / g; below z = det * y~.
        i128 det = (k == 0) ? 1 : U_[k - 1][k - 1];
        for (std::size_t ii = k; ii-- > 0;) {
            i128 acc = det * rhs_[ii];
            for (std::size_t t = ii + 1; t < k; ++t) acc -= U_[ii][t] * z_[t];
            z_[ii] = checked(acc / U_[ii][ii]);
        }
        // det * |p|^2 = det * (w0.w0) + sum z_i (d~_i . w0)
        i128 nsq = det * dot(s0, s0);
        for (std::size_t i = 0; i < k; ++i) {
            i128 q = (dot(sel_[i + 1], s0) - dot(s0, s0)) / content_;  // d~_i . w0
            nsq += z_[i] * q;
        }
        if (nsq == 0) {
            ev.zero_point = true;
            return ev;
        }
        i128 csum = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (z_[i] < 0) return ev;
            csum += z_[i];
        }
        if (csum > det * content_) return ev;  // c_0 = 1 - sum y_i < 0
        ev.in_hull = true;
        // p = w0 + D y = (det * w0 + D~ z) / det since y = z / (g det), D = g D~.
        const std::size_t dim = pts_[0].size();
        std::vector<i128> p(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            i128 acc = det * pts_[s0][c];
            for (std::size_t i = 0; i < k; ++i)
                acc += z_[i] * ((i128(pts_[sel_[i + 1]][c]) - pts_[s0][c]) / content_);
            p[c] = acc;
        }
        i128 g = det;
        for (auto v : p) g = gcd128(g, v);
        ev.key.resize(dim + 1);
        for (std::size_t c = 0; c < dim; ++c) {
            i128 v = p[c] / g;
            if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
                throw Overflow{};
            ev.key[c] = static_cast<long long>(v);
        }
        i128 dd = det / g;
        if (dd > std::numeric_limits<long long>::max()) throw Overflow{};
        ev.key[dim] = static_cast<long long>(dd);
        return ev;
    }

private:
    i128 dot(std::size_t a, std::size_t b) const { return dots_[a * n_ + b]; }
    // Gram entry of the content-reduced differences.
    i128 gram_entry(std::size_t a, std::size_t b, std::size_t s0) const {
        return (dot(a, b) - dot(a, s0) - dot(s0, b) + dot(s0, s0)) / (i128(content_) * content_);
    }

    const std::vector<std::vector<long long>>& pts_;
    std::size_t n_;
    long long content_ = 1;
    std::vector<i128> dots_;
    std::vector<std::vector<i128>> U_;
    std::vector<i128> rhs_;
    std::vector<i128> z_;
    std::vector<i128> col_;
    std::vector<std::size_t> sel_;
};

// Full-precision evaluation of one subset, used when int128 overflows.
struct ExactEval {
    bool dependent = false;
    bool zero_point = false;
    bool in_hull = false;
    std::vector<long long> key;
};

ExactEval evaluate_subset_exact(const std::vector<std::vector<long long>>& pts,
                                const std::vector<std::size_t>& sel) {
    ExactEval ev;
    const std::size_t dim = pts[0].size();
    std::vector<RatVec> S;
    for (auto i : sel) {
        RatVec v(dim);
        for (std::size_t c = 0; c < dim; ++c) v[c] = Rat(pts[i][c]);
        S.push_back(std::move(v));
    }
    MinNormPoint mn;
    try {
        mn = min_norm_affine(S);
    } catch (const std::invalid_argument&) {
        ev.dependent = true;
        return ev;
    }
    if (mn.point.is_zero()) {
        ev.zero_point = true;
        return ev;
    }
    if (!in_hull(mn.coeffs)) return ev;
    ev.in_hull = true;
    mpz_class den = common_denominator(mn.point);
    ev.key.resize(dim + 1);
    for (std::size_t c = 0; c < dim; ++c) {
        Rat v = mn.point[c] * Rat(den);
        if (!v.num().fits_slong_p()) throw std::overflow_error("candidate key out of range");
        ev.key[c] = v.num().get_si();
    }
    if (!den.fits_slong_p()) throw std::overflow_error("candidate key out of range");
    ev.key[dim] = den.get_si();
    return ev;
}

void record(CandidateMap& out, std::vector<long long> key, const std::vector<std::size_t>& witness) {
    auto it = out.find(key);
    if (it == out.end())
        out.emplace(std::move(key), witness);
    else if (witness < it->second)
        it->second = witness;
}

// DFS in exact-rational mode (after an overflow higher up the path).
void dfs_exact(const std::vector<std::vector<long long>>& pts, int max_size,
               std::vector<std::size_t>& sel, CandidateMap& out) {
    auto ev = evaluate_subset_exact(pts, sel);
    if (ev.dependent || ev.zero_point) return;
    if (ev.in_hull) record(out, std::move(ev.key), sel);
    if (static_cast<int>(sel.size()) >= max_size) return;
    for (std::size_t q = sel.back() + 1; q < pts.size(); ++q) {
        sel.push_back(q);
        dfs_exact(pts, max_size, sel, out);
        sel.pop_back();
    }
}

void dfs(const std::vector<std::vector<long long>>& pts, int max_size, PathState& st,
         CandidateMap& out) {
    PathState::Eval ev;
    try {
        ev = st.evaluate();
    } catch (const Overflow&) {
        std::vector<std::size_t> sel = st.selection();
        auto ex = evaluate_subset_exact(pts, sel);
        if (ex.dependent || ex.zero_point) return;
        if (ex.in_hull) record(out, std::move(ex.key), sel);
        if (static_cast<int>(sel.size()) >= max_size) return;
        for (std::size_t q = sel.back() + 1; q < pts.size(); ++q) {
            sel.push_back(q);
            dfs_exact(pts, max_size, sel, out);
            sel.pop_back();
        }
        return;
    }
    if (ev.zero_point) return;
    if (ev.in_hull) record(out, std::move(ev.key), st.selection());
    if (static_cast<int>(st.selection().size()) >= max_size) return;
    for (std::size_t q = st.selection().back() + 1; q < pts.size(); ++q) {
        bool ok;
        try {
            ok = st.push(q);
        } catch (const Overflow&) {
            std::vector<std::size_t> sel = st.selection();
            sel.push_back(q);
            dfs_exact(pts, max_size, sel, out);
            continue;
        }
        if (!ok) continue;
        dfs(pts, max_size, st, out);
        st.pop();
    }
}

void write_checkpoint(const std::string& path, const CandidateMap& m) {
    std::ofstream f(path, std::ios::trunc);
    for (const auto& [key, wit] : m) {
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) f << ' ';
            f << key[i];
        }
        f << '\n';
    }
}

}  // namespace

std::vector<RawCandidate> enumerate_min_norm_points(
    const std::vector<std::vector<long long>>& pts, int max_size, const EnumOptions& opts) {
    CandidateMap global;
    if (pts.empty() || max_size <= 0) return {};

    const std::size_t n = pts.size();
    int nthreads = std::max(1, opts.threads);
    std::atomic<std::size_t> next_root{0};
    std::atomic<std::size_t> done{0};
    std::mutex merge_mu;

    auto worker = [&]() {
        for (;;) {
            std::size_t root = next_root.fetch_add(1);
            if (root >= n) break;
            CandidateMap local;
            try {
                PathState st(pts, max_size);
                st.push(root);
                dfs(pts, max_size, st, local);
            } catch (const Overflow&) {
                std::vector<std::size_t> sel{root};
                dfs_exact(pts, max_size, sel, local);
            }
            {
                std::lock_guard<std::mutex> lk(merge_mu);
                for (auto& [k, w] : local) record(global, k, w);
                std::size_t d = ++done;
                if (opts.progress) opts.progress(d, n);
                if (!opts.checkpoint_path.empty()) write_checkpoint(opts.checkpoint_path, global);
            }
        }
    };

    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<RawCandidate> out;
    out.reserve(global.size());
    for (auto& [key, wit] : global) {
        RawCandidate c;
        c.den = key.back();
        c.num.assign(key.begin(), key.end() - 1);
        c.witness = wit;
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// The engine runs on scale * gamma; divide the scale back out.
BetaRecord to_record(const RawCandidate& rc, long scale) {
    BetaRecord r;
    RatVec beta(rc.num.size());
    Rat s(1, scale);
    for (std::size_t i = 0; i < rc.num.size(); ++i) beta[i] = Rat(rc.num[i], rc.den) * s;
    r.beta = std::move(beta);
    r.norm_sq = inner(r.beta, r.beta);
    r.witness.reserve(rc.witness.size());
    for (auto w : rc.witness) r.witness.push_back(w + 1);  // to 1-based ordinals
    return r;
}

}  // namespace

std::vector<BetaRecord> candidate_betas(const WeightTable& weights, const EnumOptions& opts) {
    const int max_size = tstar_dim(weights.rep.group) + 1;
    auto raw = enumerate_min_norm_points(weights.gamma_scaled, max_size, opts);
    std::vector<BetaRecord> out;
    out.reserve(raw.size());
    for (const auto& rc : raw) out.push_back(to_record(rc, weights.scale));
    std::sort(out.begin(), out.end(), [](const BetaRecord& a, const BetaRecord& b) {
        if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
        return a.beta < b.beta;
    });
    return out;
}

ChamberNormalization chamber_normalize(const GroupSpec& group, const RatVec& beta) {
    if (static_cast<int>(beta.dim()) != group.total_rank())
        throw std::invalid_argument("chamber_normalize: dimension mismatch");
    ChamberNormalization out;
    out.sorted = RatVec(beta.dim());
    int pos = 0;
    for (int n : group.factor_sizes) {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return beta[pos + a] < beta[pos + b];
        });
        for (int i = 0; i < n; ++i) out.sorted[pos + i] = beta[pos + idx[i]];
        out.perms.push_back(std::move(idx));
        pos += n;
    }
    return out;
}

std::vector<BetaRecord> compute_frakB(const RepSpec& rep, const EnumOptions& opts) {
    auto table = build_weight_table(rep);
    auto cands = candidate_betas(table, opts);

    // Ordinal permutation induced by a Weyl element, used to transport the
    // witness subset along with the normalization.
    std::map<std::vector<std::vector<int>>, std::size_t> index_of;
    for (const auto& c : table.coords) index_of[c.indices] = c.ordinal;

    std::map<RatVec, BetaRecord> dedup;
    for (const auto& rec : cands) {
        auto norm = chamber_normalize(rep.group, rec.beta);
        // sigma_j maps an old index value to its sorted position.
        std::vector<std::vector<int>> sigma;
        for (std::size_t j = 0; j < norm.perms.size(); ++j) {
            std::vector<int> s(norm.perms[j].size());
            for (std::size_t i = 0; i < norm.perms[j].size(); ++i) s[norm.perms[j][i]] = static_cast<int>(i);
            sigma.push_back(std::move(s));
        }
        BetaRecord nr;
        nr.beta = norm.sorted;
        nr.norm_sq = rec.norm_sq;
        nr.chamber_normalized = true;
        for (auto ord : rec.witness) {
            const Coordinate& c = table.coords[ord - 1];
            Coordinate moved = c;
            const auto& factors = rep.summands[c.summand].factors;
            for (std::size_t k = 0; k < factors.size(); ++k) {
                for (auto& v : moved.indices[k]) v = sigma[factors[k].factor - 1][v - 1] + 1;
                std::sort(moved.indices[k].begin(), moved.indices[k].end());
            }
            nr.witness.push_back(index_of.at(moved.indices));
        }
        std::sort(nr.witness.begin(), nr.witness.end());
        auto it = dedup.find(nr.beta);
        if (it == dedup.end())
            dedup.emplace(nr.beta, std::move(nr));
        else if (nr.witness < it->second.witness)
            it->second.witness = std::move(nr.witness);
    }

    std::vector<BetaRecord> out;
    out.reserve(dedup.size());
    for (auto& [k, v] : dedup) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), [](const BetaRecord& a, const BetaRecord& b) {
        if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
        return a.beta < b.beta;
    });
    return out;
}

}  // namespace nullcone
