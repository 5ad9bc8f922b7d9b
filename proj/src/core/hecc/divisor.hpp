#ifndef HECC_DIVISOR_HPP
#define HECC_DIVISOR_HPP

#include <map>
#include <string>

#include "hecc/curve.hpp"

namespace hecc {

class FunctionElement;

// Finite Z-linear combination of places. Zero multiplicities are never
// stored; degree weights each place by its residue degree.
class Divisor {
public:
    explicit Divisor(CurvePtr curve);
    static Divisor zero(CurvePtr curve) { return Divisor(std::move(curve)); }
    static Divisor single(CurvePtr curve, const Place& p, long mult = 1);

    const CurvePtr& curve() const { return curve_; }
    const std::map<Place, long>& terms() const { return m_; }
    long mult_of(const Place& p) const;
    bool is_zero() const { return m_.empty(); }

    long degree() const;
    std::vector<Place> support() const;
    bool is_effective() const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator-() const;
    Divisor scaled(long k) const;
    Divisor& add_term(const Place& p, long mult); // in place

    bool operator==(const Divisor& o) const;
    bool operator!=(const Divisor& o) const { return !(*this == o); }
    // componentwise comparison: *this <= o
    bool leq(const Divisor& o) const;

    std::string str() const;

private:
    CurvePtr curve_;
    std::map<Place, long> m_;
    void check_same(const Divisor& o) const;
};

struct LinEquivResult {
    bool equivalent = false;
    // when equivalent: divisor_of(witness) = D2 - D1 exactly
    std::shared_ptr<FunctionElement> witness;
};

// Linear-equivalence test with witness; implemented on top of the
// Riemann-Roch solver (see rr.cpp).
LinEquivResult is_linearly_equivalent(const Divisor& d1, const Divisor& d2);

} // namespace hecc

#endif
