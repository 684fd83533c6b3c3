#include <doctest.h>

#include <fstream>
#include <random>

#include <json.hpp>

#include "nullcone/recipes.hpp"
#include "nullcone/unipotent.hpp"

using namespace nullcone;

namespace {

const std::string kDataDir = NULLCONE_DATA_DIR;

std::map<int, RatVec> load_betas() {
    std::ifstream f(kDataDir + "/nonempty_betas.json");
    nlohmann::json j;
    f >> j;
    std::map<int, RatVec> out;
    for (const auto& rec : j.at("betas")) {
        auto num = rec.at("beta_num");
        long den = rec.at("beta_den").get<long>();
        RatVec b(num.size());
        for (std::size_t k = 0; k < num.size(); ++k) b[k] = Rat(num[k].get<long>(), den);
        out[rec.at("i").get<int>()] = b;
    }
    return out;
}

}  // namespace

TEST_CASE("active unipotent parameters follow the Levi blocks") {
    GroupSpec g;
    g.factor_sizes = {5, 4};
    // third stratum: blocks {1,2}{3,4,5} and {1}{2,3,4}
    BlockCuts cuts = {{2}, {1}};
    auto vars = active_unipotent_vars(g, cuts);
    CHECK(vars.vars.size() == 9);
    for (const auto& v : vars.vars) {
        if (v.factor == 1) {
            CHECK(v.row >= 3);
            CHECK(v.col <= 2);
        } else {
            CHECK(v.col == 1);
        }
    }
}

TEST_CASE("symbolic unipotent action") {
    auto rep = flagship_rep();
    Basis basis(rep);
    auto table = build_weight_table(rep);
    auto betas = load_betas();
    auto points = load_representatives(kDataDir + "/representatives.json", basis);

    SUBCASE("third stratum reproduces the displayed entry") {
        auto stratum = stratum_data(table, betas.at(3));
        auto vars = active_unipotent_vars(rep.group, stratum.blocks);
        std::vector<Poly> all;
        auto wpart = act_unipotent(table, stratum, points.at(3), vars, &all);
        // entry (3,4) of the second component is coordinate e_{342} = 18
        Poly expect(vars.vars.size());
        Poly::Mono m1(vars.vars.size(), 0), m2(vars.vars.size(), 0);
        m1[vars.index.at(UVar{1, 4, 1})] = 1;
        m2[vars.index.at(UVar{2, 2, 1})] = 1;
        expect.add_term(m1, Rat(-1));
        expect.add_term(m2, Rat(1));
        CHECK(wpart.at(18) == expect);

        // at u = 0 the result is R and the W part vanishes
        std::vector<Rat> zeros(vars.vars.size(), Rat(0));
        for (std::size_t o = 1; o <= basis.dim(); ++o) {
            Rat v = all[o - 1].eval(zeros);
            CHECK(v == points.at(3).at(o));
        }
    }

    SUBCASE("one-dimensional stratum has nothing to eliminate") {
        auto stratum = stratum_data(table, betas.at(292));
        auto vars = active_unipotent_vars(rep.group, stratum.blocks);
        auto wpart = act_unipotent(table, stratum, points.at(292), vars);
        CHECK(wpart.empty());
    }

    SUBCASE("symbolic action agrees with the numeric matrix action") {
        std::mt19937 rng(555);
        std::uniform_int_distribution<int> num(-3, 3);
        for (int idx : {3, 9, 273}) {
            auto stratum = stratum_data(table, betas.at(idx));
            auto vars = active_unipotent_vars(rep.group, stratum.blocks);
            std::vector<Poly> all;
            act_unipotent(table, stratum, points.at(idx), vars, &all);
            for (int t = 0; t < 20; ++t) {
                std::vector<Rat> vals;
                for (std::size_t k = 0; k < vars.vars.size(); ++k)
                    vals.push_back(Rat(num(rng), 1 + (t % 3)));
                auto mats = unipotent_matrices(rep.group, vars, vals);
                Tensor direct = apply_group(mats, points.at(idx));
                for (std::size_t o = 1; o <= basis.dim(); ++o)
                    CHECK(all[o - 1].eval(vals) == direct.at(o));
            }
        }
    }

    SUBCASE("support outside Z is rejected") {
        auto stratum = stratum_data(table, betas.at(292));
        auto vars = active_unipotent_vars(rep.group, stratum.blocks);
        Tensor bad(basis);
        bad.add(0, {{1, 2}, {1}}, Rat(1));  // e_{121} is not in Z_292
        CHECK_THROWS_AS(act_unipotent(table, stratum, bad, vars), std::invalid_argument);
    }
}

TEST_CASE("shipped schedules certify the triangular form") {
    auto rep = flagship_rep();
    Basis basis(rep);
    auto table = build_weight_table(rep);
    auto betas = load_betas();
    auto points = load_representatives(kDataDir + "/representatives.json", basis);
    auto schedules = load_schedules(kDataDir + "/schedules.json");
    REQUIRE(schedules.size() >= 5);

    std::set<int> have;
    for (const auto& s : schedules) have.insert(s.beta_index);
    for (int required : {3, 9, 49, 50, 273}) CHECK(have.count(required));

    for (const auto& sched : schedules) {
        auto stratum = stratum_data(table, betas.at(sched.beta_index));
        auto vars = active_unipotent_vars(rep.group, stratum.blocks);
        Tensor point(basis);
        if (auto it = points.find(sched.beta_index); it != points.end())
            point = it->second;
        else
            for (auto o : stratum.I) point.at(o) = Rat(1);
        auto polys = act_unipotent(table, stratum, point, vars);
        auto report = check_schedule(polys, vars, sched);
        INFO("stratum ", sched.beta_index, ": ", report.detail);
        CHECK(report.pass);
        CHECK(sched.steps.size() == stratum.J.size());
    }

    SUBCASE("structural defects are rejected") {
        const auto& sched = *std::find_if(schedules.begin(), schedules.end(),
                                          [](const Schedule& s) { return s.beta_index == 3; });
        auto stratum = stratum_data(table, betas.at(3));
        auto vars = active_unipotent_vars(rep.group, stratum.blocks);
        auto polys = act_unipotent(table, stratum, points.at(3), vars);

        Schedule dup = sched;
        dup.steps[1].pivot = dup.steps[0].pivot;  // shared pivot
        CHECK(!check_schedule(polys, vars, dup).pass);

        Schedule missing = sched;
        missing.steps.pop_back();
        CHECK(!check_schedule(polys, vars, missing).pass);

        Schedule wrong = sched;
        std::swap(wrong.steps.front().pivot, wrong.steps.back().pivot);
        CHECK(!check_schedule(polys, vars, wrong).pass);
    }
}
