#include <doctest.h>

#include <fstream>
#include <random>

#include <json.hpp>

#include "nullcone/certificates.hpp"

using namespace nullcone;

namespace {

const std::string kDataDir = NULLCONE_DATA_DIR;

EmptinessCertificate find(const std::vector<EmptinessCertificate>& cs, int i) {
    for (const auto& c : cs)
        if (c.beta_index == i) return c;
    REQUIRE(false);
    return {};
}

}  // namespace

TEST_CASE("shipped certificate set") {
    auto certs = load_certificates(kDataDir + "/emptiness_certificates.json");
    CHECK(certs.size() == 231);

    auto table = build_weight_table(flagship_rep());

    SUBCASE("second published row verifies with the stated weights") {
        auto c = find(certs, 2);
        CHECK(c.lambda == std::vector<long>{-39, 45, -22, 28, -12, -32, 35, -15, 12});
        CHECK(c.zeroed == std::set<std::size_t>{4, 9, 10, 14, 17, 20, 24, 27, 29, 32, 35, 36});
        auto s = stratum_data(table, c.beta);
        auto rep = verify_certificate(c, s, table);
        CHECK(rep.pass());
        CHECK(rep.computed_weights.at(7) == 1);    // e_{251}: 45 - 12 - 32
        CHECK(rep.computed_weights.at(31) == 18);  // e_{124}: -39 + 45 + 12
    }

    SUBCASE("late one-line row") {
        auto c = find(certs, 261);
        CHECK(c.lambda == std::vector<long>{0, 0, 0, 0, 0, -1, -1, -1, 3});
        CHECK(c.zeroed == std::set<std::size_t>{10, 20, 30});
        auto s = stratum_data(table, c.beta);
        auto rep = verify_certificate(c, s, table);
        CHECK(rep.pass());
        CHECK(rep.computed_weights.at(40) == 3);
    }

    SUBCASE("full set passes") {
        auto summary = verify_all(certs, table);
        CHECK(summary.passed == 231);
        CHECK(summary.failed == 0);
    }

    SUBCASE("tampering is detected and attributed") {
        auto certs2 = certs;
        bool mutated = false;
        for (auto& c : certs2)
            if (c.beta_index == 155 && !c.expected_weights.empty()) {
                c.expected_weights.begin()->second += 1;
                mutated = true;
            }
        REQUIRE(mutated);
        auto summary = verify_all(certs2, table);
        CHECK(summary.passed == 230);
        CHECK(summary.failed == 1);
        for (const auto& r : summary.reports)
            if (!r.pass()) CHECK(r.beta_index == 155);
    }

    SUBCASE("zero 1-PS fails positivity") {
        auto c = find(certs, 2);
        std::fill(c.lambda.begin(), c.lambda.end(), 0);
        auto s = stratum_data(table, c.beta);
        auto rep = verify_certificate(c, s, table);
        CHECK(!rep.positivity_ok);
        CHECK(!rep.pass());
    }

    SUBCASE("weight computation is projection invariant") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> pick(0, 230);
        for (int t = 0; t < 10; ++t) {
            const auto& c = certs[pick(rng)];
            RatVec lam(9);
            for (int i = 0; i < 9; ++i) lam[i] = Rat(c.lambda[i]);
            for (std::size_t o = 1; o <= 40; ++o) {
                RatVec raw(9);
                for (int i = 0; i < 9; ++i) raw[i] = Rat(table.raw[o - 1][i]);
                CHECK(inner(lam, raw) == inner(lam, table.gamma[o - 1]));
            }
        }
    }
}

TEST_CASE("certificate records round-trip losslessly") {
    auto certs = load_certificates(kDataDir + "/emptiness_certificates.json");
    // serialize back to the wire schema and reload
    nlohmann::json j;
    auto arr = nlohmann::json::array();
    for (const auto& c : certs) {
        nlohmann::json rec;
        rec["i"] = c.beta_index;
        mpz_class den = common_denominator(c.beta);
        auto nums = nlohmann::json::array();
        for (std::size_t k = 0; k < c.beta.dim(); ++k)
            nums.push_back((c.beta[k] * Rat(den)).num().get_si());
        rec["beta_num"] = nums;
        rec["beta_den"] = den.get_si();
        rec["zeroed"] = c.zeroed;
        rec["lambda"] = c.lambda;
        nlohmann::json w;
        for (const auto& [o, v] : c.expected_weights) w[std::to_string(o)] = v;
        rec["weights"] = w;
        arr.push_back(rec);
    }
    j["certificates"] = arr;
    std::string p = "/tmp/nullcone_roundtrip_certs.json";
    std::ofstream(p) << j.dump();
    auto again = load_certificates(p);
    REQUIRE(again.size() == certs.size());
    for (std::size_t k = 0; k < certs.size(); ++k) {
        CHECK(again[k].beta_index == certs[k].beta_index);
        CHECK(again[k].beta == certs[k].beta);
        CHECK(again[k].zeroed == certs[k].zeroed);
        CHECK(again[k].lambda == certs[k].lambda);
        CHECK(again[k].expected_weights == certs[k].expected_weights);
    }
}

TEST_CASE("loader rejects malformed files") {
    SUBCASE("empty certificate list") {
        std::string p = "/tmp/nullcone_empty_certs.json";
        std::ofstream(p) << "{\"certificates\": []}";
        CHECK(load_certificates(p).empty());
    }
    SUBCASE("duplicate index") {
        std::string p = "/tmp/nullcone_dup_certs.json";
        std::ofstream(p) << R"({"certificates": [
            {"i": 2, "beta_num": [0,0,0,0,0,-3,1,1,1], "beta_den": 12,
             "zeroed": [], "lambda": [0,0,0,0,0,0,0,0,0], "weights": {}},
            {"i": 2, "beta_num": [0,0,0,0,0,-3,1,1,1], "beta_den": 12,
             "zeroed": [], "lambda": [0,0,0,0,0,0,0,0,0], "weights": {}}]})";
        CHECK_THROWS_AS(load_certificates(p), std::runtime_error);
    }
    SUBCASE("nonpositive expected weight") {
        std::string p = "/tmp/nullcone_badw_certs.json";
        std::ofstream(p) << R"({"certificates": [
            {"i": 2, "beta_num": [0,0,0,0,0,-3,1,1,1], "beta_den": 12,
             "zeroed": [], "lambda": [0,0,0,0,0,0,0,0,0], "weights": {"4": 0}}]})";
        CHECK_THROWS_AS(load_certificates(p), std::runtime_error);
    }
}
