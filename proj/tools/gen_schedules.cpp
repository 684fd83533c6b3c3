// Generates data/schedules.json: completes transcribed pivot orders into
// (ordinal, pivot) assignments via the schedule search, then verifies.
#include <fstream>
#include <iostream>
#include <map>

#include <json.hpp>

#include "nullcone/recipes.hpp"
#include "nullcone/unipotent.hpp"

using namespace nullcone;

int main() {
    auto rep = flagship_rep();
    Basis basis(rep);
    auto table = build_weight_table(rep);
    auto points = load_representatives(std::string(NULLCONE_DATA_DIR) + "/representatives.json", basis);

    struct Spec {
        int i;
        std::vector<std::string> pivots;
    };
    std::vector<Spec> specs = {
        {3, {"u2_21", "u1_41", "u1_51", "u2_41", "u1_32", "u1_42", "u2_31", "u1_52", "u1_31"}},
        {5, {"u2_31", "u2_32", "u1_51", "u1_52", "u2_41", "u2_42", "u1_53", "u1_54"}},
        {9, {"u1_31", "u1_41", "u2_42", "u2_41", "u1_21", "u2_43"}},
        {42, {"u2_21", "u2_31", "u2_41"}},
        {49, {"u1_54", "u2_32", "u1_21", "u2_43", "u1_43", "u1_31", "u1_53", "u1_42",
              "u2_21", "u1_52", "u1_41", "u2_41"}},
        {50, {"u1_43", "u1_54", "u1_21", "u2_32", "u1_32", "u2_21", "u1_53", "u2_42",
              "u1_31", "u2_31", "u1_41", "u2_41", "u1_51"}},
        {40, {"u1_31", "u1_42", "u1_54", "u2_31", "u2_42", "u2_43", "u2_21", "u1_43",
              "u1_52", "u1_41", "u1_53", "u2_41", "u1_51"}},
        {121, {"u1_31", "u1_32", "u1_41", "u1_42", "u2_31", "u2_32", "u2_43", "u1_54",
               "u1_53", "u2_41", "u2_42", "u1_51", "u1_52"}},
        {273, {"u1_31", "u1_32", "u1_41", "u1_42", "u1_51", "u1_52", "u2_41", "u2_42", "u2_43"}},
        {280, {"u2_43"}},
        {287, {"u1_31", "u1_32", "u1_41", "u1_42", "u2_42", "u2_43", "u1_54", "u1_53"}},
    };

    std::ofstream out(std::string(NULLCONE_DATA_DIR) + "/schedules.json");
    out << "{\n \"rep\": \"gl5xgl4_wedge2x4\",\n \"schedules\": [\n";
    bool first = true;
    // read betas
    std::map<int, RatVec> betas;
    {
        std::ifstream f(std::string(NULLCONE_DATA_DIR) + "/nonempty_betas.json");
        nlohmann::json j;
        f >> j;
        for (const auto& rec : j.at("betas")) {
            auto num = rec.at("beta_num");
            long den = rec.at("beta_den").get<long>();
            RatVec b(num.size());
            for (std::size_t k = 0; k < num.size(); ++k) b[k] = Rat(num[k].get<long>(), den);
            betas[rec.at("i").get<int>()] = b;
        }
    }

    std::map<int, std::vector<std::string>> transcribed;
    for (const auto& spec : specs) transcribed[spec.i] = spec.pivots;

    std::vector<int> without;
    auto emit = [&](const Schedule& sched, const char* how) {
        if (!first) out << ",\n";
        first = false;
        out << "  {\"i\": " << sched.beta_index << ", \"steps\": [";
        for (std::size_t k = 0; k < sched.steps.size(); ++k) {
            if (k) out << ", ";
            out << "[" << sched.steps[k].ordinal << ", \"" << sched.steps[k].pivot.str()
                << "\"]";
        }
        out << "], \"extras\": [";
        for (std::size_t k = 0; k < sched.extras.size(); ++k) {
            if (k) out << ", ";
            out << "\"" << sched.extras[k].str() << "\"";
        }
        out << "]}";
        std::cout << "stratum " << sched.beta_index << ": " << sched.steps.size()
                  << " steps, " << sched.extras.size() << " extras (" << how << ")\n";
    };

    for (const auto& [idx, beta] : betas) {
        auto stratum = stratum_data(table, beta);
        auto vars = active_unipotent_vars(rep.group, stratum.blocks);
        auto pt = points.find(idx);
        Tensor point(basis);
        if (pt != points.end()) {
            point = pt->second;
        } else if (stratum.J.empty()) {
            // nothing to eliminate; any point of Z drives the (empty) W map
            for (auto o : stratum.I) point.at(o) = Rat(1);
        } else {
            without.push_back(idx);
            continue;
        }
        auto polys = act_unipotent(table, stratum, point, vars);

        std::optional<Schedule> sched;
        const char* how = "auto";
        if (auto it = transcribed.find(idx); it != transcribed.end()) {
            std::vector<UVar> order;
            for (const auto& p : it->second) order.push_back(UVar::parse(p));
            sched = complete_schedule(polys, vars, idx, order);
            how = "transcribed";
            if (!sched) {
                std::cerr << "transcribed completion failed for " << idx << "\n";
                return 1;
            }
        } else if (polys.empty()) {
            sched = Schedule{};
            sched->beta_index = idx;
            for (const auto& v : vars.vars) sched->extras.push_back(v);
            how = "vacuous";
        } else {
            sched = auto_schedule(polys, vars, idx);
            if (!sched) {
                without.push_back(idx);
                std::cout << "stratum " << idx << ": no schedule found (W size "
                          << polys.size() << ")\n";
                continue;
            }
        }
        auto report = check_schedule(polys, vars, *sched);
        if (!report.pass) {
            std::cerr << "verification failed for " << idx << ": " << report.detail << "\n";
            return 1;
        }
        emit(*sched, how);
    }
    out << "\n ],\n \"without_schedule\": [";
    for (std::size_t k = 0; k < without.size(); ++k) out << (k ? ", " : "") << without[k];
    out << "]\n}\n";
    std::cout << "rows without a schedule: " << without.size() << "\n";
    return 0;
}
