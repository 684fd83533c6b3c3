#include "nullcone/lie.hpp"

#include <fstream>

#include <json.hpp>

#include "nullcone/linalg.hpp"

namespace nullcone {

Tensor lie_derivative(const std::vector<RatMat>& X, const Tensor& w) {
    const Basis& basis = *w.basis;
    const RepSpec& rep = basis.rep();
    Tensor out(basis);
    for (const auto& c : basis.coords()) {
        const Rat& v = w.coeffs[c.ordinal - 1];
        if (v.is_zero()) continue;
        const auto& factors = rep.summands[c.summand].factors;
        // Leibniz over slots; on an exterior power, over index positions.
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const RatMat& Xj = X[factors[k].factor - 1];
            const auto& idx = c.indices[k];
            for (std::size_t pos = 0; pos < idx.size(); ++pos) {
                for (std::size_t a = 1; a <= Xj.rows(); ++a) {
                    const Rat& entry = Xj(a - 1, idx[pos] - 1);
                    if (entry.is_zero()) continue;
                    auto moved = c.indices;
                    moved[k][pos] = static_cast<int>(a);
                    Tensor t(basis);
                    // reuse Tensor::add for wedge re-sorting and sign
                    t.add(c.summand, moved, v * entry);
                    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
                        out.coeffs[i] += t.coeffs[i];
                }
            }
        }
    }
    return out;
}

LieAction lie_action(const Tensor& w) {
    const RepSpec& rep = w.basis->rep();
    const auto& sizes = rep.group.factor_sizes;
    LieAction act;
    act.L = RatMat(w.basis->dim(), rep.group.dim());
    std::size_t col = 0;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        int n = sizes[j];
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                std::vector<RatMat> X;
                for (int m : sizes) X.push_back(RatMat(m, m));
                X[j](a - 1, b - 1) = Rat(1);
                Tensor d = lie_derivative(X, w);
                for (std::size_t r = 0; r < d.coeffs.size(); ++r) act.L(r, col) = d.coeffs[r];
                ++col;
            }
    }
    return act;
}

long stabilizer_dim(const Tensor& w) {
    auto act = lie_action(w);
    return static_cast<long>(act.L.cols()) - static_cast<long>(rank(act.L));
}

bool open_orbit_certify(const Tensor& w) {
    const RepSpec& rep = w.basis->rep();
    long expect = rep.group.dim() - static_cast<long>(rep.dim());
    if (expect < 0) return false;
    return stabilizer_dim(w) == expect;
}

namespace {

// Dual-number scalar a + b eps with eps^2 = 0.
struct Dual {
    Rat a, b;
    Dual() = default;
    Dual(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
    friend Dual operator*(const Dual& x, const Dual& y) {
        return {x.a * y.a, x.a * y.b + x.b * y.a};
    }
};

// Determinant over the dual numbers by cofactor expansion.
Dual dual_det(const std::vector<std::vector<Dual>>& m, std::vector<int>& cols, std::size_t row) {
    if (cols.empty()) return {Rat(1), Rat(0)};
    Dual acc{Rat(0), Rat(0)};
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        std::vector<int> rest;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) rest.push_back(cols[t]);
        Dual sub = m[row][c] * dual_det(m, rest, row + 1);
        if (k % 2) sub = Dual{Rat(0), Rat(0)} - sub;
        acc = acc + sub;
    }
    return acc;
}

}  // namespace

LieAction lie_action_dual_numbers(const Tensor& w) {
    const Basis& basis = *w.basis;
    const RepSpec& rep = basis.rep();
    const auto& sizes = rep.group.factor_sizes;
    LieAction act;
    act.L = RatMat(basis.dim(), rep.group.dim());
    std::size_t col = 0;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        int n = sizes[j];
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                // g_j = I + eps E_ab, other factors identity; act on w by
                // minors over dual numbers and keep the eps part.
                for (const auto& ci : basis.coords()) {
                    const Rat& v = w.coeffs[ci.ordinal - 1];
                    if (v.is_zero()) continue;
                    const auto& factors = rep.summands[ci.summand].factors;
                    for (const auto& co : basis.coords()) {
                        if (co.summand != ci.summand) continue;
                        Dual coeff{v, Rat(0)};
                        for (std::size_t k = 0; k < factors.size(); ++k) {
                            const auto& rows_idx = co.indices[k];
                            const auto& cols_idx = ci.indices[k];
                            std::vector<std::vector<Dual>> m(rows_idx.size(),
                                                             std::vector<Dual>(cols_idx.size()));
                            for (std::size_t r = 0; r < rows_idx.size(); ++r)
                                for (std::size_t c = 0; c < cols_idx.size(); ++c) {
                                    Rat base = rows_idx[r] == cols_idx[c] ? Rat(1) : Rat(0);
                                    Rat epspart =
                                        (factors[k].factor - 1 == static_cast<int>(j) &&
                                         rows_idx[r] == a && cols_idx[c] == b)
                                            ? Rat(1)
                                            : Rat(0);
                                    m[r][c] = Dual{base, epspart};
                                }
                            std::vector<int> cidx(cols_idx.size());
                            for (std::size_t t = 0; t < cidx.size(); ++t) cidx[t] = static_cast<int>(t);
                            coeff = coeff * dual_det(m, cidx, 0);
                        }
                        if (!coeff.b.is_zero()) act.L(co.ordinal - 1, col) += coeff.b;
                    }
                }
                ++col;
            }
    }
    return act;
}

std::vector<StabilizerFixture> load_stabilizer_fixtures(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    f >> j;
    std::vector<StabilizerFixture> out;
    for (const auto& rec : j.at("fixtures")) {
        StabilizerFixture fx;
        fx.name = rec.at("name").get<std::string>();
        fx.rep.group.factor_sizes = rec.at("factors").get<std::vector<int>>();
        for (const auto& s : rec.at("summands")) {
            Summand sm;
            for (const auto& fac : s) {
                TensorFactor tf;
                tf.factor = fac.at(0).get<int>();
                tf.degree = fac.at(1).get<int>();
                sm.factors.push_back(tf);
            }
            fx.rep.summands.push_back(std::move(sm));
        }
        fx.rep.validate();
        for (const auto& t : rec.at("point")) {
            FixtureTerm term;
            term.summand = t.at("s").get<int>();
            for (const auto& ix : t.at("idx")) term.indices.push_back(ix.get<std::vector<int>>());
            term.coeff = Rat::parse(t.at("c").get<std::string>());
            fx.terms.push_back(std::move(term));
        }
        fx.expected_dim = rec.at("dim").get<long>();
        out.push_back(std::move(fx));
    }
    return out;
}

}  // namespace nullcone
