#ifndef HECC_FUNCTION_HPP
#define HECC_FUNCTION_HPP

#include "hecc/divisor.hpp"

namespace hecc {

// Element (a(x) + b(x) y) / c(x) of the function field, stored with
// gcd(a, b, c) constant and c monic. Equality is decidable directly on the
// normal form.
class FunctionElement {
public:
    FunctionElement(CurvePtr curve, const Poly& a, const Poly& b, const Poly& c);
    static FunctionElement zero(CurvePtr curve);
    static FunctionElement one(CurvePtr curve);
    static FunctionElement from_constant(CurvePtr curve, const FieldElem& v);
    static FunctionElement coordinate_x(CurvePtr curve);
    static FunctionElement coordinate_y(CurvePtr curve);

    const CurvePtr& curve() const { return curve_; }
    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    const Poly& c() const { return c_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    FunctionElement operator+(const FunctionElement& o) const;
    FunctionElement operator-(const FunctionElement& o) const;
    FunctionElement operator*(const FunctionElement& o) const;
    FunctionElement operator/(const FunctionElement& o) const;
    FunctionElement operator-() const;
    FunctionElement inverse() const;
    FunctionElement scaled(const FieldElem& k) const;

    bool operator==(const FunctionElement& o) const;
    bool operator!=(const FunctionElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    CurvePtr curve_;
    Poly a_, b_, c_;
    void normalize();
    void check_same(const FunctionElement& o) const;
};

// Order of vanishing of h at the place (negative at poles). h must be nonzero.
long valuation(const FunctionElement& h, const Place& pl);

// The principal divisor div(h); total degree is exactly zero.
Divisor divisor_of(const FunctionElement& h);

// div(dx/y) = (2g-2) * infinity for odd-degree models.
Divisor canonical_divisor(CurvePtr curve);

// Hensel lift of the y-branch at a split place: returns B with
// B^2 = f mod p^prec and B = branch mod p.
Poly lift_branch(const Curve& curve, const Place& pl, int prec);

} // namespace hecc

#endif
