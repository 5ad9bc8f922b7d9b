#ifndef HECC_CERT_HPP
#define HECC_CERT_HPP

#include "hecc/construct.hpp"

namespace hecc {

// Deterministic serialization: fixed field order, exact integers, rationals
// as "num/den" strings. Identical (curve, seed) inputs give identical bytes.
std::string certificate_to_json(const Certificate& cert);

struct CheckAgreement {
    std::string id;
    bool recorded = false;
    bool recomputed = false;
};

struct CheckOutcome {
    std::vector<CheckAgreement> checks;
    bool omega_matches = false;    // stored omega equals push_forward(theta)
    bool overall_recorded = false;
    bool overall_recomputed = false;
    bool agree = true; // every recomputed flag matches the recorded one

    bool accept() const { return agree && omega_matches && overall_recomputed; }
};

// Re-run every check from the certificate's inputs (curve, seed, P, D_Q,
// D_R, theta) with fresh solver state and compare pass/fail flags.
CheckOutcome check_certificate(const std::string& json_text);

} // namespace hecc

#endif
