#ifndef HECC_H1_HPP
#define HECC_H1_HPP

#include <cstdint>

#include "hecc/rr.hpp"

namespace hecc {

// A class in H^1(X, O(D)) represented adelically: finitely many places carry
// a principal part with orders strictly below what O(D) permits there.
// Construction normalizes (permitted orders and zero coefficients are
// dropped); the empty system is the zero class.
class H1Class {
public:
    explicit H1Class(Divisor ambient);
    H1Class(Divisor ambient, TailMap tails, bool normalize = true);

    const Divisor& ambient() const { return ambient_; }
    const TailMap& tails() const { return tails_; }
    bool is_empty() const { return tails_.empty(); }

    // throws ContractViolation when a stored tail has no forbidden-order term
    // or a coefficient in the wrong residue field
    void validate() const;

    bool operator==(const H1Class& o) const;

    std::string str() const;

private:
    Divisor ambient_;
    TailMap tails_;
};

struct ZeroClassResult {
    bool zero = false;
    std::optional<FunctionElement> witness; // expansion matches every tail
};

// Mittag-Leffler solvability: the class vanishes iff a global function
// realizes the prescribed principal parts within O(D).
ZeroClassResult is_zero_class(const H1Class& c);

// dim H^1(X, O(D)) computed from the tail-restriction rank of L(D + N*inf),
// independent of the Serre-dual route h0(K - D).
int h1_dim_via_corank(const Divisor& d);

// Deterministic seeded search for a class with is_zero_class = false.
// Throws NoNonzeroClass when h1(D) = 0; SearchExhausted after the budget.
H1Class nonzero_class(const Divisor& d, std::uint64_t seed);

// The map H^1(O(D)) -> H^1(O(D')) induced by O(D) -> O(D'), for D <= D':
// same tails over the larger divisor, renormalized.
H1Class push_forward(const H1Class& c, const Divisor& d_prime);

// Sum of classes over a common ambient divisor (linearity checks).
H1Class add_classes(const H1Class& a, const H1Class& b);

} // namespace hecc

#endif
