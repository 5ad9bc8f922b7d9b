#ifndef HECC_CONSTRUCT_HPP
#define HECC_CONSTRUCT_HPP

#include "hecc/bundle.hpp"

namespace hecc {

// The assembled instance: canonical decomposition K = P + D, the split
// D = D_Q + D_R, the classes theta and omega = rho(theta), and the bundles
//   F = O,  V = Ext(theta; O(D_Q), O(-D_R)),  E = O(P) (+) V,
//   Q = Ext(omega; O(P+D_Q), O(-D_R)).
struct ConstructionData {
    CurvePtr curve;
    std::uint64_t seed = 0;
    Place p = Place::infinity();
    Divisor d, d_q, d_r;
    H1Class theta; // over D
    H1Class omega; // over P + D
    BundlePtr f_bundle, v_bundle, e_bundle, q_bundle;
    bool sigma_disjoint = false; // supp(P) and supp(D_Q) disjoint

    ConstructionData(CurvePtr c, std::uint64_t s, Place pp, Divisor dd, Divisor dq,
                     Divisor dr, H1Class th, H1Class om)
        : curve(std::move(c)), seed(s), p(std::move(pp)), d(std::move(dd)),
          d_q(std::move(dq)), d_r(std::move(dr)), theta(std::move(th)),
          omega(std::move(om)) {}
};

struct CheckResult {
    std::string id;
    std::string statement;
    std::string anchor;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> witnesses;
    bool pass = false;
};

struct Certificate {
    std::string version = "1";
    CurvePtr curve;
    std::uint64_t seed = 0;
    std::shared_ptr<const ConstructionData> data;
    std::vector<CheckResult> checks;
    bool overall_pass = false;
};

// K = P + D with P of degree 1 outside supp(D); degree D = 2g-3.
// Candidate points: hints first, then infinity, then small x-values; the
// seed offsets the starting candidate. Throws SearchExhausted past the
// documented budgets (200 candidate places, 500 section combinations each).
std::pair<Place, Divisor> decompose_canonical(const CurvePtr& curve, std::uint64_t seed,
                                              const std::vector<Place>& hints = {});

// D = D_Q + D_R, effective, deg D_Q = g-2, deg D_R = g-1; seeded choice
// among all valid multiplicity splits. Throws NoValidSplit when none exists.
std::pair<Divisor, Divisor> split_divisor(const Divisor& d, int genus, std::uint64_t seed);

// Derive everything downstream of (P, D_Q, D_R, theta). Shared by the
// builder, the certificate checker and tamper tests.
ConstructionData assemble(const CurvePtr& curve, std::uint64_t seed, const Place& p,
                          const Divisor& d_q, const Divisor& d_r, const H1Class& theta);

// The full pipeline; retries the canonical decomposition when a divisor
// admits no valid split.
ConstructionData build(const CurvePtr& curve, std::uint64_t seed,
                       const std::vector<Place>& hints = {});

// Evaluate and record checks C1..C12; failures are recorded, never thrown.
Certificate verify(const ConstructionData& data);

} // namespace hecc

#endif
