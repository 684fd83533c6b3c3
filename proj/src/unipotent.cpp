#include "nullcone/unipotent.hpp"

#include <fstream>

#include <json.hpp>

namespace nullcone {

std::string UVar::str() const {
    return "u" + std::to_string(factor) + "_" + std::to_string(row) + std::to_string(col);
}

UVar UVar::parse(const std::string& s) {
    // "u<factor>_<row><col>" with single-digit row/col
    if (s.size() < 5 || s[0] != 'u') throw std::invalid_argument("bad unipotent variable " + s);
    auto us = s.find('_');
    UVar v;
    v.factor = std::stoi(s.substr(1, us - 1));
    v.row = s[us + 1] - '0';
    v.col = s[us + 2] - '0';
    if (v.row <= v.col) throw std::invalid_argument("unipotent variable must be strictly lower");
    return v;
}

UnipotentVars active_unipotent_vars(const GroupSpec& group, const BlockCuts& blocks) {
    UnipotentVars out;
    for (int j = 0; j < group.num_factors(); ++j) {
        int n = group.factor_sizes[j];
        for (int r = 2; r <= n; ++r)
            for (int c = 1; c < r; ++c)
                if (block_of(blocks[j], r) != block_of(blocks[j], c))
                    out.vars.push_back({j + 1, r, c});
    }
    for (std::size_t i = 0; i < out.vars.size(); ++i) out.index[out.vars[i]] = i;
    return out;
}

namespace {

// n_j(u) as a matrix of polynomials in the active parameters.
std::vector<PolyMatrix> unipotent_poly_matrices(const GroupSpec& group, const UnipotentVars& vars) {
    std::vector<PolyMatrix> out;
    const std::size_t arity = vars.vars.size();
    for (int j = 0; j < group.num_factors(); ++j) {
        int n = group.factor_sizes[j];
        PolyMatrix m(n, arity);
        for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(Rat(1), arity);
        for (int r = 2; r <= n; ++r)
            for (int c = 1; c < r; ++c) {
                auto it = vars.index.find({j + 1, r, c});
                if (it != vars.index.end()) m(r - 1, c - 1) = Poly::var(it->second, arity);
            }
        out.push_back(std::move(m));
    }
    return out;
}

Poly poly_minor(const PolyMatrix& g, const std::vector<int>& rows, const std::vector<int>& cols) {
    PolyMatrix m(rows.size(), g.arity());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = g(rows[i] - 1, cols[j] - 1);
    return det_poly(m);
}

}  // namespace

std::map<std::size_t, Poly> act_unipotent(const WeightTable& weights, const StratumData& stratum,
                                          const Tensor& R, const UnipotentVars& vars,
                                          std::vector<Poly>* all) {
    const Basis& basis = *R.basis;
    if (weights.coords.size() != basis.dim())
        throw std::invalid_argument("act_unipotent: weight table does not match the basis");
    const RepSpec& rep = basis.rep();
    for (std::size_t o = 1; o <= basis.dim(); ++o)
        if (!R.at(o).is_zero() && !stratum.I.count(o))
            throw std::invalid_argument("act_unipotent: R not supported on Z");

    auto n_of_u = unipotent_poly_matrices(rep.group, vars);
    const std::size_t arity = vars.vars.size();
    std::vector<Poly> result(basis.dim(), Poly(arity));
    const auto& coords = basis.coords();
    for (std::size_t in = 0; in < coords.size(); ++in) {
        if (R.coeffs[in].is_zero()) continue;
        const Coordinate& ci = coords[in];
        const auto& factors = rep.summands[ci.summand].factors;
        for (std::size_t on = 0; on < coords.size(); ++on) {
            const Coordinate& co = coords[on];
            if (co.summand != ci.summand) continue;
            Poly coeff = Poly::constant(R.coeffs[in], arity);
            for (std::size_t k = 0; k < factors.size() && !coeff.is_zero(); ++k)
                coeff *= poly_minor(n_of_u[factors[k].factor - 1], co.indices[k], ci.indices[k]);
            if (!coeff.is_zero()) result[on] += coeff;
        }
    }
    if (all) *all = result;
    std::map<std::size_t, Poly> wpart;
    for (auto o : stratum.J) wpart[o] = result[o - 1];
    return wpart;
}

namespace {

// poly = c * pivot + Q with c in {+-1} and Q free of the forbidden set.
bool step_ok(const Poly& poly, std::size_t pivot_idx,
             const std::vector<bool>& forbidden, const UnipotentVars& vars) {
    Poly::Mono unit(vars.vars.size(), 0);
    unit[pivot_idx] = 1;
    Rat c = poly.coefficient(unit);
    if (!(c == Rat(1) || c == Rat(-1))) return false;
    Poly q = poly;
    q.add_term(unit, -c);
    for (const auto& [m, coeff] : q.terms()) {
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0 && forbidden[v]) return false;
    }
    return true;
}

}  // namespace

ScheduleReport check_schedule(const std::map<std::size_t, Poly>& polys,
                              const UnipotentVars& vars, const Schedule& schedule) {
    ScheduleReport rep;
    std::set<std::size_t> targets;
    std::set<UVar> pivots;
    for (const auto& st : schedule.steps) {
        if (!targets.insert(st.ordinal).second) {
            rep.detail = "duplicate target ordinal " + std::to_string(st.ordinal);
            return rep;
        }
        if (!pivots.insert(st.pivot).second) {
            rep.detail = "duplicate pivot " + st.pivot.str();
            return rep;
        }
        if (!vars.index.count(st.pivot)) {
            rep.detail = "pivot not an active parameter: " + st.pivot.str();
            return rep;
        }
    }
    std::set<std::size_t> wset;
    for (const auto& [o, p] : polys) wset.insert(o);
    if (targets != wset) {
        rep.detail = "targets do not cover the W coordinates exactly";
        return rep;
    }
    // forbidden = pivots of this and later steps
    std::vector<bool> forbidden(vars.vars.size(), false);
    for (const auto& st : schedule.steps) forbidden[vars.index.at(st.pivot)] = true;
    for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
        const auto& st = schedule.steps[i];
        std::size_t pidx = vars.index.at(st.pivot);
        if (!step_ok(polys.at(st.ordinal), pidx, forbidden, vars)) {
            rep.detail = "step " + std::to_string(i + 1) + " (ordinal " +
                         std::to_string(st.ordinal) + ", pivot " + st.pivot.str() +
                         ") is not in triangular form";
            return rep;
        }
        forbidden[pidx] = false;  // earlier pivots become allowed
    }
    rep.pass = true;
    return rep;
}

namespace {

bool complete_rec(const std::map<std::size_t, Poly>& polys, const UnipotentVars& vars,
                  const std::vector<UVar>& order, std::size_t step,
                  std::vector<bool>& forbidden, std::set<std::size_t>& used,
                  std::vector<ScheduleStep>& acc) {
    if (step == order.size()) return used.size() == polys.size();
    std::size_t pidx = vars.index.at(order[step]);
    for (const auto& [o, poly] : polys) {
        if (used.count(o)) continue;
        if (!step_ok(poly, pidx, forbidden, vars)) continue;
        used.insert(o);
        acc.push_back({o, order[step]});
        forbidden[pidx] = false;
        if (complete_rec(polys, vars, order, step + 1, forbidden, used, acc)) return true;
        forbidden[pidx] = true;
        acc.pop_back();
        used.erase(o);
    }
    return false;
}

}  // namespace

std::optional<Schedule> complete_schedule(const std::map<std::size_t, Poly>& polys,
                                          const UnipotentVars& vars, int beta_index,
                                          const std::vector<UVar>& pivot_order) {
    if (pivot_order.size() != polys.size()) return std::nullopt;
    std::vector<bool> forbidden(vars.vars.size(), false);
    for (const auto& v : pivot_order) {
        auto it = vars.index.find(v);
        if (it == vars.index.end()) return std::nullopt;
        forbidden[it->second] = true;
    }
    std::set<std::size_t> used;
    std::vector<ScheduleStep> acc;
    if (!complete_rec(polys, vars, pivot_order, 0, forbidden, used, acc)) return std::nullopt;
    Schedule s;
    s.beta_index = beta_index;
    s.steps = std::move(acc);
    for (const auto& v : vars.vars)
        if (std::find(pivot_order.begin(), pivot_order.end(), v) == pivot_order.end())
            s.extras.push_back(v);
    return s;
}

namespace {

// Reverse search: pick the step that will run LAST first. Its polynomial may
// involve anything except pivots already fixed for later steps.
bool auto_rec(const std::vector<std::pair<std::size_t, const Poly*>>& items,
              const UnipotentVars& vars, std::vector<bool>& taken_ordinal,
              std::vector<bool>& forbidden, std::size_t placed,
              std::vector<ScheduleStep>& rev, long& budget) {
    if (placed == items.size()) return true;
    if (--budget < 0) return false;
    for (std::size_t oi = 0; oi < items.size(); ++oi) {
        if (taken_ordinal[oi]) continue;
        const Poly& p = *items[oi].second;
        for (std::size_t v = 0; v < vars.vars.size(); ++v) {
            if (forbidden[v]) continue;
            Poly::Mono unit(vars.vars.size(), 0);
            unit[v] = 1;
            Rat c = p.coefficient(unit);
            if (!(c == Rat(1) || c == Rat(-1))) continue;
            Poly q = p;
            q.add_term(unit, -c);
            bool fine = true;
            for (const auto& [m, coeff] : q.terms()) {
                for (std::size_t t = 0; t < m.size() && fine; ++t)
                    if (m[t] > 0 && (forbidden[t] || t == v)) fine = false;
                if (!fine) break;
            }
            if (!fine) continue;
            taken_ordinal[oi] = true;
            forbidden[v] = true;
            rev.push_back({items[oi].first, vars.vars[v]});
            if (auto_rec(items, vars, taken_ordinal, forbidden, placed + 1, rev, budget))
                return true;
            rev.pop_back();
            forbidden[v] = false;
            taken_ordinal[oi] = false;
        }
    }
    return false;
}

}  // namespace

std::optional<Schedule> auto_schedule(const std::map<std::size_t, Poly>& polys,
                                      const UnipotentVars& vars, int beta_index, long budget) {
    std::vector<std::pair<std::size_t, const Poly*>> items;
    for (const auto& [o, p] : polys) items.emplace_back(o, &p);
    std::vector<bool> taken(items.size(), false), forbidden(vars.vars.size(), false);
    std::vector<ScheduleStep> rev;
    if (!auto_rec(items, vars, taken, forbidden, 0, rev, budget)) return std::nullopt;
    Schedule s;
    s.beta_index = beta_index;
    s.steps.assign(rev.rbegin(), rev.rend());
    std::set<UVar> used;
    for (const auto& st : s.steps) used.insert(st.pivot);
    for (const auto& v : vars.vars)
        if (!used.count(v)) s.extras.push_back(v);
    return s;
}

std::vector<Schedule> load_schedules(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    f >> j;
    std::vector<Schedule> out;
    for (const auto& rec : j.at("schedules")) {
        Schedule s;
        s.beta_index = rec.at("i").get<int>();
        for (const auto& st : rec.at("steps")) {
            ScheduleStep step;
            step.ordinal = st.at(0).get<std::size_t>();
            step.pivot = UVar::parse(st.at(1).get<std::string>());
            s.steps.push_back(step);
        }
        if (rec.contains("extras"))
            for (const auto& e : rec["extras"]) s.extras.push_back(UVar::parse(e.get<std::string>()));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<RatMat> unipotent_matrices(const GroupSpec& group, const UnipotentVars& vars,
                                       const std::vector<Rat>& values) {
    if (values.size() != vars.vars.size())
        throw std::invalid_argument("unipotent_matrices: value arity mismatch");
    std::vector<RatMat> out;
    for (int j = 0; j < group.num_factors(); ++j) {
        int n = group.factor_sizes[j];
        RatMat m = RatMat::identity(n);
        for (std::size_t k = 0; k < vars.vars.size(); ++k) {
            const auto& v = vars.vars[k];
            if (v.factor == j + 1) m(v.row - 1, v.col - 1) = values[k];
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace nullcone
