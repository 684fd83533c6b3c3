// Command-line interface: enumerate stratifying vectors, inspect strata,
// verify shipped data sets, and run the substratification cross-check.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullcone/certificates.hpp"
#include "nullcone/minnorm.hpp"
#include "nullcone/lie.hpp"
#include "nullcone/recipes.hpp"
#include "nullcone/substrata.hpp"
#include "nullcone/unipotent.hpp"

using namespace nullcone;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnknownBeta = 3;

RepSpec load_rep_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config " + path);
    nlohmann::json j;
    f >> j;
    RepSpec rep;
    rep.group.factor_sizes = j.at("factors").get<std::vector<int>>();
    for (const auto& s : j.at("summands")) {
        Summand sm;
        for (const auto& fac : s) {
            TensorFactor tf;
            tf.factor = fac.at("factor").get<int>();
            tf.degree = fac.at("degree").get<int>();
            if (fac.contains("lo")) tf.lo = fac["lo"].get<int>();
            if (fac.contains("hi")) tf.hi = fac["hi"].get<int>();
            sm.factors.push_back(tf);
        }
        rep.summands.push_back(std::move(sm));
    }
    rep.validate();
    return rep;
}

RatVec parse_beta(const std::string& s, int dim) {
    std::vector<Rat> entries;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) entries.push_back(Rat::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) entries.push_back(Rat::parse(cur));
    if (static_cast<int>(entries.size()) != dim)
        throw std::runtime_error("beta must have " + std::to_string(dim) + " entries");
    return RatVec(entries);
}

nlohmann::json rat_json(const Rat& r) {
    return {{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

nlohmann::json vec_json(const RatVec& v) {
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(rat_json(v[i]));
    return arr;
}

int default_threads() {
    if (const char* env = std::getenv("NULLCONE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

// membership in the candidate set: restricted enumeration over the weights
// pairing equally with beta (any witness lies inside them)
bool in_candidate_set(const WeightTable& table, const RatVec& beta) {
    if (beta.is_zero()) return false;
    Rat nsq = inner(beta, beta);
    std::vector<std::vector<long long>> pts;
    for (std::size_t o = 1; o <= table.gamma.size(); ++o)
        if (inner(table.gamma[o - 1], beta) == nsq)
            pts.push_back(table.gamma_scaled[o - 1]);
    if (pts.empty()) return false;
    auto raw = enumerate_min_norm_points(pts, tstar_dim(table.rep.group) + 1, {});
    for (const auto& rc : raw) {
        RatVec v(rc.num.size());
        for (std::size_t c = 0; c < rc.num.size(); ++c)
            v[c] = Rat(rc.num[c], rc.den) * Rat(1, table.scale);
        if (v == beta) return true;
    }
    return false;
}

int cmd_enumerate(const std::string& config, int threads, const std::string& checkpoint,
                  const std::string& json_out, const std::string& csv_out, bool quiet) {
    RepSpec rep;
    try {
        rep = load_rep_config(config);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitInputError;
    }
    EnumOptions opts;
    opts.threads = threads;
    opts.checkpoint_path = checkpoint;
    if (!quiet)
        opts.progress = [](std::size_t done, std::size_t total) {
            std::cerr << "\rprogress: " << done << "/" << total << std::flush;
            if (done == total) std::cerr << "\n";
        };
    auto B = compute_frakB(rep, opts);
    std::cout << "count " << B.size() << "\n";
    for (std::size_t k = 0; k < B.size(); ++k)
        std::cout << (k + 1) << " " << B[k].beta.str() << "\n";

    if (!json_out.empty()) {
        nlohmann::json j;
        j["count"] = B.size();
        auto rows = nlohmann::json::array();
        for (std::size_t k = 0; k < B.size(); ++k) {
            nlohmann::json row;
            row["canonical"] = k + 1;
            row["beta"] = vec_json(B[k].beta);
            row["norm_sq"] = rat_json(B[k].norm_sq);
            row["witness"] = B[k].witness;
            rows.push_back(row);
        }
        j["betas"] = rows;
        std::ofstream(json_out) << j.dump(1) << "\n";
    }
    if (!csv_out.empty()) {
        std::ofstream csv(csv_out);
        csv << "canonical,norm_sq,beta\n";
        for (std::size_t k = 0; k < B.size(); ++k)
            csv << (k + 1) << "," << B[k].norm_sq.str() << ",\"" << B[k].beta.str() << "\"\n";
    }
    return kExitPass;
}

int cmd_stratum(const std::string& config, const std::string& beta_str) {
    RepSpec rep;
    WeightTable table;
    RatVec beta;
    try {
        rep = load_rep_config(config);
        table = build_weight_table(rep);
        beta = parse_beta(beta_str, rep.group.total_rank());
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    auto norm = chamber_normalize(rep.group, beta);
    if (norm.sorted != beta || !in_candidate_set(table, beta)) {
        std::cerr << "beta is not a chamber-normalized stratifying vector of this "
                     "representation\n";
        return kExitUnknownBeta;
    }
    auto s = stratum_data(table, beta);
    nlohmann::json j;
    j["beta"] = vec_json(beta);
    j["lambda"] = s.lambda;
    auto zset = nlohmann::json::array(), wset = nlohmann::json::array();
    std::cout << "lambda:";
    for (long v : s.lambda) std::cout << " " << v;
    std::cout << "\nZ coordinates:";
    for (auto o : s.I) {
        std::cout << " " << table.coords[o - 1].label() << "(" << o << ")";
        zset.push_back(o);
    }
    std::cout << "\nW coordinates:";
    for (auto o : s.J) {
        std::cout << " " << table.coords[o - 1].label() << "(" << o << ")";
        wset.push_back(o);
    }
    std::cout << "\nblocks:";
    for (const auto& cuts : s.blocks) {
        std::cout << " [";
        for (std::size_t i = 0; i < cuts.size(); ++i) std::cout << (i ? "," : "") << cuts[i];
        std::cout << "]";
    }
    std::cout << "\nchi exponents:";
    for (const auto& f : s.chi) {
        std::cout << " (";
        for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
        std::cout << ")";
    }
    std::cout << "\n";
    j["Z"] = zset;
    j["W"] = wset;
    j["blocks"] = s.blocks;
    j["chi"] = s.chi;
    return kExitPass;
}

int cmd_verify(const std::string& certificates, const std::string& recipes,
               const std::string& representatives, const std::string& schedules,
               const std::string& fixtures, const std::string& betas_path,
               const std::string& report_path, const std::string& csv_path) {
    auto rep = flagship_rep();
    Basis basis(rep);
    auto table = build_weight_table(rep);
    nlohmann::json report;
    std::size_t passed = 0, failed = 0;

    try {
        if (!certificates.empty()) {
            auto certs = load_certificates(certificates);
            auto summary = verify_all(certs, table);
            passed += summary.passed;
            failed += summary.failed;
            auto arr = nlohmann::json::array();
            for (const auto& r : summary.reports) {
                nlohmann::json row;
                row["i"] = r.beta_index;
                row["pass"] = r.pass();
                if (!r.pass()) row["detail"] = r.detail;
                arr.push_back(row);
                std::cout << "certificate " << r.beta_index << ": "
                          << (r.pass() ? "pass" : "FAIL " + r.detail) << "\n";
            }
            report["certificates"] = arr;
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                csv << "i,orthogonality,membership,positivity,weights_match,pass\n";
                for (const auto& r : summary.reports)
                    csv << r.beta_index << "," << r.orthogonality_ok << "," << r.membership_ok
                        << "," << r.positivity_ok << "," << r.weights_match << "," << r.pass()
                        << "\n";
            }
        }
        if (!recipes.empty()) {
            if (representatives.empty()) {
                std::cerr << "recipes need --representatives\n";
                return kExitInputError;
            }
            auto recs = load_recipes(recipes);
            auto points = load_representatives(representatives, basis);
            auto arr = nlohmann::json::array();
            for (const auto& r : recs) {
                if (r.stub) {
                    arr.push_back({{"i", r.beta_index}, {"stub", true}});
                    continue;
                }
                auto it = points.find(r.beta_index);
                if (it == points.end()) {
                    std::cerr << "no representative for stratum " << r.beta_index << "\n";
                    return kExitInputError;
                }
                auto res = eval_recipe(r, it->second);
                res.pass ? ++passed : ++failed;
                std::cout << "recipe " << r.beta_index << ": value " << res.combined.str()
                          << " expected " << res.expected.str()
                          << (res.pass ? " pass" : " FAIL") << "\n";
                arr.push_back({{"i", r.beta_index},
                               {"value", res.combined.str()},
                               {"pass", res.pass}});
            }
            report["recipes"] = arr;
        }
        if (!schedules.empty()) {
            if (representatives.empty() || betas_path.empty()) {
                std::cerr << "schedules need --representatives and --betas\n";
                return kExitInputError;
            }
            auto scheds = load_schedules(schedules);
            auto points = load_representatives(representatives, basis);
            std::map<int, RatVec> betas;
            {
                std::ifstream f(betas_path);
                if (!f) throw std::runtime_error("cannot open " + betas_path);
                nlohmann::json bj;
                f >> bj;
                for (const auto& r : bj.at("betas")) {
                    auto num = r.at("beta_num");
                    long den = r.at("beta_den").get<long>();
                    RatVec b(num.size());
                    for (std::size_t k = 0; k < num.size(); ++k)
                        b[k] = Rat(num[k].get<long>(), den);
                    betas[r.at("i").get<int>()] = b;
                }
            }
            auto arr = nlohmann::json::array();
            for (const auto& sched : scheds) {
                auto bit = betas.find(sched.beta_index);
                if (bit == betas.end()) {
                    std::cerr << "no beta for stratum " << sched.beta_index << "\n";
                    return kExitInputError;
                }
                auto stratum = stratum_data(table, bit->second);
                Tensor point(basis);
                auto it = points.find(sched.beta_index);
                if (it != points.end()) {
                    point = it->second;
                } else if (stratum.J.empty()) {
                    for (auto o : stratum.I) point.at(o) = Rat(1);
                } else {
                    std::cerr << "no representative for stratum " << sched.beta_index << "\n";
                    return kExitInputError;
                }
                auto vars = active_unipotent_vars(rep.group, stratum.blocks);
                auto polys = act_unipotent(table, stratum, point, vars);
                auto res = check_schedule(polys, vars, sched);
                res.pass ? ++passed : ++failed;
                std::cout << "schedule " << sched.beta_index << ": "
                          << (res.pass ? "pass" : "FAIL " + res.detail) << "\n";
                arr.push_back({{"i", sched.beta_index}, {"pass", res.pass}});
            }
            report["schedules"] = arr;
        }
        if (!fixtures.empty()) {
            auto fxs = load_stabilizer_fixtures(fixtures);
            auto arr = nlohmann::json::array();
            for (const auto& fx : fxs) {
                Basis b(fx.rep);
                Tensor w(b);
                for (const auto& t : fx.terms) w.add(t.summand, t.indices, t.coeff);
                long got = stabilizer_dim(w);
                bool ok = got == fx.expected_dim;
                ok ? ++passed : ++failed;
                std::cout << "fixture " << fx.name << ": dim " << got << " expected "
                          << fx.expected_dim << (ok ? " pass" : " FAIL") << "\n";
                arr.push_back({{"name", fx.name}, {"dim", got}, {"pass", ok}});
            }
            report["fixtures"] = arr;
        }
    } catch (const std::exception& e) {
        std::cerr << "verification aborted: " << e.what() << "\n";
        return kExitInputError;
    }

    report["passed"] = passed;
    report["failed"] = failed;
    std::cout << "summary: " << passed << " passed, " << failed << " failed\n";
    if (!report_path.empty()) std::ofstream(report_path) << report.dump(1) << "\n";
    return failed == 0 ? kExitPass : kExitVerifyFail;
}

int cmd_substrata(const std::string& config, const std::string& beta_str, int threads) {
    RepSpec rep;
    WeightTable table;
    RatVec beta;
    try {
        rep = load_rep_config(config);
        table = build_weight_table(rep);
        beta = parse_beta(beta_str, rep.group.total_rank());
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    auto norm = chamber_normalize(rep.group, beta);
    if (norm.sorted != beta || !in_candidate_set(table, beta)) {
        std::cerr << "beta is not a chamber-normalized stratifying vector of this "
                     "representation\n";
        return kExitUnknownBeta;
    }
    auto stratum = stratum_data(table, beta);
    EnumOptions opts;
    opts.threads = threads;
    auto frakB = compute_frakB(rep, opts);
    auto scan = substrata_scan(stratum, frakB, table);
    auto raw = substrata_candidates_raw(stratum, table);
    auto direct = substrata_direct(stratum, table);
    std::set<RatVec> filtered;
    for (const auto& c : scan)
        if (raw.count(c)) filtered.insert(c);

    std::cout << "scan candidates: " << scan.size() << "\n";
    std::cout << "direct candidates: " << direct.size() << "\n";
    std::cout << "realizability-filtered scan: " << filtered.size() << "\n";
    bool agree = filtered == direct;
    std::cout << "agreement: " << (agree ? "true" : "false") << "\n";
    for (const auto& c : direct) {
        auto flags = proposition_applicability(table, frakB, stratum, c);
        std::cout << "  " << c.str() << "  candidate=" << flags.beta2_in_frakC
                  << " z_contained=" << flags.z_contained
                  << " m_contained=" << flags.m_contained << "\n";
    }
    return agree ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stratification toolkit for products of general linear groups"};
    app.require_subcommand(1);

    std::string config, beta_str, checkpoint, json_out, csv_out;
    std::string certificates, recipes, representatives, schedules, fixtures, report_path;
    std::string betas_path;
    int threads = default_threads();
    bool quiet = false;

    auto* enumerate = app.add_subcommand("enumerate", "compute the stratifying set");
    enumerate->add_option("--config", config, "representation config (JSON)")->required();
    enumerate->add_option("--threads", threads, "worker threads");
    enumerate->add_option("--checkpoint", checkpoint, "partial candidate dump file");
    enumerate->add_option("--json", json_out, "write the table as JSON");
    enumerate->add_option("--csv", csv_out, "write the table as CSV");
    enumerate->add_flag("--quiet", quiet, "suppress progress output");

    auto* stratum = app.add_subcommand("stratum", "per-stratum data for one beta");
    stratum->add_option("--config", config, "representation config (JSON)")->required();
    stratum->add_option("--beta", beta_str, "comma-separated rational entries")->required();

    auto* verify = app.add_subcommand("verify", "verify shipped data files");
    verify->add_option("--certificates", certificates, "emptiness certificate file");
    verify->add_option("--recipes", recipes, "invariant recipe file");
    verify->add_option("--representatives", representatives, "representative points file");
    verify->add_option("--schedules", schedules, "unipotent schedule file");
    verify->add_option("--fixtures", fixtures, "stabilizer fixture file");
    verify->add_option("--betas", betas_path, "stratifying-vector table (for schedules)");
    verify->add_option("--json", report_path, "machine-readable report");
    verify->add_option("--csv", csv_out, "CSV export of certificate reports");

    auto* sub = app.add_subcommand("substrata", "candidate scan for one stratum");
    sub->add_option("--config", config, "representation config (JSON)")->required();
    sub->add_option("--beta", beta_str, "comma-separated rational entries")->required();
    sub->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(config, threads, checkpoint, json_out, csv_out, quiet);
        if (stratum->parsed()) return cmd_stratum(config, beta_str);
        if (verify->parsed())
            return cmd_verify(certificates, recipes, representatives, schedules, fixtures,
                              betas_path, report_path, csv_out);
        if (sub->parsed()) return cmd_substrata(config, beta_str, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
