#ifndef HECC_POLY_HPP
#define HECC_POLY_HPP

#include <string>
#include <vector>

#include "hecc/field.hpp"

namespace hecc {

// Dense univariate polynomial over an exact field, coefficients ascending.
// No trailing zero coefficients; deg(0) = -1.
class Poly {
public:
    Poly() = default; // zero polynomial over Q; bind a field before use
    explicit Poly(const Field& f) : field_(f) {}
    Poly(const Field& f, std::vector<FieldElem> coeffs);
    static Poly constant(const FieldElem& c);
    static Poly from_long_coeffs(const Field& f, const std::vector<long>& ascending);
    static Poly monomial(const Field& f, int degree, const FieldElem& c);
    static Poly x(const Field& f) { return from_long_coeffs(f, {0, 1}); }

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    FieldElem coeff(int i) const; // zero outside stored range
    const FieldElem& lc() const;  // leading coefficient; throws on zero poly

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const FieldElem& c) const;
    Poly shifted(int k) const; // * x^k, k >= 0

    // Euclidean division: *this = q*d + r with deg r < deg d.
    void divrem(const Poly& d, Poly& q, Poly& r) const;
    Poly operator/(const Poly& d) const; // exact or truncating quotient
    Poly operator%(const Poly& d) const;

    bool divides(const Poly& other) const; // *this | other, exact

    Poly derivative() const;
    Poly monic() const; // throws on zero
    FieldElem eval(const FieldElem& at) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    int cmp(const Poly& o) const; // by degree, then coefficients from the top

    std::string str(const std::string& var = "x") const; // descending, human form

private:
    Field field_ = Field::rationals();
    std::vector<FieldElem> c_;
    void trim();
    void check_same(const Poly& o) const;
};

Poly gcd(const Poly& a, const Poly& b);                      // monic gcd
Poly gcd_ext(const Poly& a, const Poly& b, Poly& u, Poly& v); // g = u*a + v*b
bool is_squarefree(const Poly& f); // gcd(f, f') constant; throws on zero
int ord_at(const Poly& f, const Poly& p); // multiplicity of irreducible p in f
FieldElem resultant(const Poly& a, const Poly& b);
Poly interpolate(const Field& f, const std::vector<FieldElem>& xs,
                 const std::vector<FieldElem>& ys);

} // namespace hecc

#endif
