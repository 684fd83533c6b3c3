#ifndef NULLCONE_UNIPOTENT_HPP
#define NULLCONE_UNIPOTENT_HPP

#include <optional>

#include "nullcone/poly.hpp"
#include "nullcone/strata.hpp"
#include "nullcone/tensor.hpp"

namespace nullcone {

// A lower-triangular unipotent parameter u_{factor, row, col}, row > col.
struct UVar {
    int factor = 1;  // 1-based
    int row = 0;
    int col = 0;
    auto operator<=>(const UVar&) const = default;
    std::string str() const;       // "u1_41"
    static UVar parse(const std::string&);
};

// The parameters not pinned to zero for a stratum: strictly-lower entries
// crossing a Levi block boundary (the unipotent radical's coordinates).
struct UnipotentVars {
    std::vector<UVar> vars;
    std::map<UVar, std::size_t> index;
};

UnipotentVars active_unipotent_vars(const GroupSpec& group, const BlockCuts& blocks);

// Coordinates of n(u) . R as polynomials in the active parameters;
// `all` gets every coordinate, the returned map is restricted to W ordinals.
std::map<std::size_t, Poly> act_unipotent(const WeightTable& weights, const StratumData& stratum,
                                          const Tensor& R, const UnipotentVars& vars,
                                          std::vector<Poly>* all = nullptr);

struct ScheduleStep {
    std::size_t ordinal = 0;  // target W coordinate
    UVar pivot;
};

struct Schedule {
    int beta_index = 0;
    std::vector<ScheduleStep> steps;
    std::vector<UVar> extras;  // informational; recomputed as active - pivots
};

struct ScheduleReport {
    bool pass = false;
    std::string detail;
};

// Verifies the triangular shape: the i-th target polynomial must be
// (+-1) * pivot_i + Q with Q free of pivot_i and of all later pivots, and
// the targets must cover the W ordinals exactly once.
ScheduleReport check_schedule(const std::map<std::size_t, Poly>& polys,
                              const UnipotentVars& vars, const Schedule& schedule);

// Completes a pivot order into target assignments by backtracking search;
// returns nullopt when no valid assignment exists.
std::optional<Schedule> complete_schedule(const std::map<std::size_t, Poly>& polys,
                                          const UnipotentVars& vars, int beta_index,
                                          const std::vector<UVar>& pivot_order);

// Searches for any valid schedule (targets and pivots) by processing the
// steps in reverse; a found schedule certifies that the surjectivity lemma
// applies. Returns nullopt when no assignment exists within the node budget.
std::optional<Schedule> auto_schedule(const std::map<std::size_t, Poly>& polys,
                                      const UnipotentVars& vars, int beta_index,
                                      long budget = 2000000);

std::vector<Schedule> load_schedules(const std::string& path);

// Numeric n(u) matrices at a rational specialization of the parameters.
std::vector<RatMat> unipotent_matrices(const GroupSpec& group, const UnipotentVars& vars,
                                       const std::vector<Rat>& values);

}  // namespace nullcone

#endif
