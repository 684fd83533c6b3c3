#ifndef NULLCONE_CERTIFICATES_HPP
#define NULLCONE_CERTIFICATES_HPP

#include <map>
#include <string>

#include "nullcone/strata.hpp"

namespace nullcone {

// Destabilizing one-parameter-subgroup certificate asserting that a stratum
// has empty semistable locus: after zeroing the listed coordinates, every
// remaining Z coordinate has strictly positive pairing with lambda.
struct EmptinessCertificate {
    int beta_index = 0;                      // the published row index
    RatVec beta;
    std::set<std::size_t> zeroed;            // ordinals claimed eliminable
    std::vector<long> lambda;                // integral 1-PS in Z^{N_T}
    std::map<std::size_t, long> expected_weights;  // published values, optional per ordinal
};

struct CertificateReport {
    int beta_index = 0;
    bool orthogonality_ok = false;  // per-block sums zero and <lambda, beta> = 0
    bool membership_ok = false;     // zeroed subset of I_beta
    bool positivity_ok = false;     // weights positive off the zeroed set
    bool weights_match = false;     // computed weights equal expected ones
    std::map<std::size_t, long> computed_weights;
    std::string detail;

    bool pass() const {
        return orthogonality_ok && membership_ok && positivity_ok && weights_match;
    }
};

CertificateReport verify_certificate(const EmptinessCertificate& cert,
                                     const StratumData& stratum,
                                     const WeightTable& weights);

// Loads the JSON data file; throws std::runtime_error with row diagnostics
// on schema violations (duplicate indices, wrong arity, non-integers).
std::vector<EmptinessCertificate> load_certificates(const std::string& path);

struct VerificationSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<CertificateReport> reports;
};

VerificationSummary verify_all(const std::vector<EmptinessCertificate>& certs,
                               const WeightTable& weights);

}  // namespace nullcone

#endif
