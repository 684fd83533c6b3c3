#include "nullcone/certificates.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nullcone {

CertificateReport verify_certificate(const EmptinessCertificate& cert,
                                     const StratumData& stratum,
                                     const WeightTable& weights) {
    if (stratum.beta != cert.beta)
        throw std::invalid_argument("verify_certificate: stratum does not match certificate beta");
    CertificateReport rep;
    rep.beta_index = cert.beta_index;

    for (auto o : cert.zeroed)
        if (!stratum.I.count(o))
            throw std::invalid_argument("verify_certificate: zeroed ordinal outside Z");

    // membership: per-block determinant-one condition puts the 1-PS in the
    // stability subgroup; orthogonality to beta puts it in G_{st,beta}.
    const auto& group = weights.rep.group;
    rep.membership_ok = true;
    int pos = 0;
    for (int n : group.factor_sizes) {
        long s = 0;
        for (int i = 0; i < n; ++i) s += cert.lambda[pos + i];
        if (s != 0) rep.membership_ok = false;
        pos += n;
    }
    RatVec lam(cert.lambda.size());
    for (std::size_t i = 0; i < cert.lambda.size(); ++i) lam[i] = Rat(cert.lambda[i]);
    rep.orthogonality_ok = inner(lam, cert.beta).is_zero();

    rep.positivity_ok = true;
    for (auto o : stratum.I) {
        long w = 0;
        const auto& raw = weights.raw[o - 1];
        for (std::size_t c = 0; c < raw.size(); ++c) w += cert.lambda[c] * raw[c];
        rep.computed_weights[o] = w;
        if (!cert.zeroed.count(o) && w <= 0) {
            rep.positivity_ok = false;
            rep.detail += "nonpositive weight at ordinal " + std::to_string(o) + "; ";
        }
    }

    rep.weights_match = true;
    for (const auto& [o, expect] : cert.expected_weights) {
        auto it = rep.computed_weights.find(o);
        if (it == rep.computed_weights.end() || it->second != expect) {
            rep.weights_match = false;
            rep.detail += "weight mismatch at ordinal " + std::to_string(o) + "; ";
        }
    }
    return rep;
}

std::vector<EmptinessCertificate> load_certificates(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    f >> j;

    std::vector<EmptinessCertificate> out;
    std::set<int> seen;
    std::size_t row = 0;
    for (const auto& rec : j.at("certificates")) {
        ++row;
        auto fail = [&](const std::string& what) {
            std::ostringstream os;
            os << path << ": row " << row << ": " << what;
            throw std::runtime_error(os.str());
        };
        EmptinessCertificate c;
        if (!rec.contains("i") || !rec["i"].is_number_integer()) fail("missing index");
        c.beta_index = rec["i"].get<int>();
        if (!seen.insert(c.beta_index).second) fail("duplicate beta index");
        auto num = rec.at("beta_num");
        long den = rec.at("beta_den").get<long>();
        if (den <= 0) fail("nonpositive denominator");
        c.beta = RatVec(num.size());
        for (std::size_t k = 0; k < num.size(); ++k) c.beta[k] = Rat(num[k].get<long>(), den);
        for (const auto& z : rec.at("zeroed")) c.zeroed.insert(z.get<std::size_t>());
        for (const auto& l : rec.at("lambda")) c.lambda.push_back(l.get<long>());
        if (c.lambda.size() != c.beta.dim()) fail("lambda arity");
        for (const auto& [k, v] : rec.at("weights").items()) {
            long o = std::stol(k);
            if (o < 1) fail("bad ordinal");
            if (!v.is_number_integer() || v.get<long>() <= 0) fail("weights must be positive integers");
            c.expected_weights[static_cast<std::size_t>(o)] = v.get<long>();
        }
        out.push_back(std::move(c));
    }
    return out;
}

VerificationSummary verify_all(const std::vector<EmptinessCertificate>& certs,
                               const WeightTable& weights) {
    VerificationSummary s;
    for (const auto& c : certs) {
        auto stratum = stratum_data(weights, c.beta);
        auto rep = verify_certificate(c, stratum, weights);
        if (rep.pass())
            ++s.passed;
        else
            ++s.failed;
        s.reports.push_back(std::move(rep));
    }
    return s;
}

}  // namespace nullcone
