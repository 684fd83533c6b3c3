// Emits data/beta_index_map.json: canonical enumeration order vs the
// published row indices (collected from both shipped beta tables).
#include <fstream>
#include <iostream>
#include <map>

#include <json.hpp>

#include "nullcone/beta_enum.hpp"

using namespace nullcone;

int main() {
    std::map<RatVec, int> published;
    for (const char* file : {"/nonempty_betas.json", "/emptiness_certificates.json"}) {
        std::ifstream f(std::string(NULLCONE_DATA_DIR) + file);
        nlohmann::json j;
        f >> j;
        const auto& arr = j.contains("betas") ? j.at("betas") : j.at("certificates");
        for (const auto& rec : arr) {
            auto num = rec.at("beta_num");
            long den = rec.at("beta_den").get<long>();
            RatVec b(num.size());
            for (std::size_t k = 0; k < num.size(); ++k) b[k] = Rat(num[k].get<long>(), den);
            published[b] = rec.at("i").get<int>();
        }
    }
    std::cout << "published betas: " << published.size() << "\n";

    EnumOptions opts;
    opts.threads = 1;
    auto B = compute_frakB(flagship_rep(), opts);
    std::cout << "computed: " << B.size() << "\n";

    nlohmann::json out;
    out["rep"] = "gl5xgl4_wedge2x4";
    auto rows = nlohmann::json::array();
    int unmatched = 0;
    for (std::size_t k = 0; k < B.size(); ++k) {
        auto it = published.find(B[k].beta);
        if (it == published.end()) {
            ++unmatched;
            continue;
        }
        mpz_class den = common_denominator(B[k].beta);
        nlohmann::json row;
        row["canonical"] = k + 1;
        row["published"] = it->second;
        auto nums = nlohmann::json::array();
        for (std::size_t c = 0; c < B[k].beta.dim(); ++c)
            nums.push_back((B[k].beta[c] * Rat(den)).num().get_si());
        row["beta_num"] = nums;
        row["beta_den"] = den.get_si();
        rows.push_back(row);
    }
    out["rows"] = rows;
    std::cout << "unmatched: " << unmatched << "\n";
    if (unmatched || published.size() != B.size()) return 1;
    std::ofstream(std::string(NULLCONE_DATA_DIR) + "/beta_index_map.json") << out.dump(1) << "\n";
    return 0;
}
