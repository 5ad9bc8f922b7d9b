#ifndef HECC_CURVE_HPP
#define HECC_CURVE_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hecc/poly.hpp"
#include "hecc/residue.hpp"

namespace hecc {

// Smooth odd-degree hyperelliptic model y^2 = f(x), deg f = 2g+1, g >= 2.
// Exactly one place at infinity, of degree 1. Immutable.
class Curve {
public:
    Curve(const Field& field, const Poly& f);

    const Field& field() const { return field_; }
    const Poly& f() const { return f_; }
    int genus() const { return genus_; }

    bool same_curve(const Curve& o) const { return field_ == o.field_ && f_ == o.f_; }
    std::string describe() const;

private:
    Field field_;
    Poly f_;
    int genus_;
};

using CurvePtr = std::shared_ptr<const Curve>;

CurvePtr make_curve(const Field& field, const Poly& f);

// Closed point of the curve. Finite places sit over a monic irreducible
// p(x) of the x-line: split (two places, conjugate y-branches b, -b with
// b^2 = f mod p), ramified (p | f, the y = 0 locus), or inert (f a nonsquare
// mod p; residue field gains sqrt(f)). The infinite place is ramified over
// the x-line but has residue degree 1 for odd models.
class Place {
public:
    enum class Kind { Finite = 0, Infinity = 1 };
    enum class FiniteType { Ramified = 0, Split = 1, Inert = 2 };

    static Place infinity();
    static Place split(const Poly& minpoly, const Poly& branch);
    static Place ramified(const Poly& minpoly);
    static Place inert(const Poly& minpoly);

    Kind kind() const { return kind_; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    FiniteType finite_type() const;
    const Poly& minpoly() const;
    const Poly& branch() const; // Split only

    int degree() const;
    // ramification index over the x-line (pole order of p(x) resp. 1/x)
    int ram_index() const;

    ResFieldPtr residue_field(const Curve& curve) const;

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    bool operator<(const Place& o) const { return cmp(o) < 0; }
    // canonical order: degree, then finite before infinite, then minimal
    // polynomial, then (ramified < split < inert), then branch
    int cmp(const Place& o) const;

    std::string str() const;

private:
    Kind kind_ = Kind::Infinity;
    FiniteType ftype_ = FiniteType::Ramified;
    Poly minpoly_;
    Poly branch_;
    Place() = default;
};

// All places of the function field over the closed point p(x) of the x-line.
// p must be monic irreducible over the base field (checked).
std::vector<Place> places_above(const Curve& curve, const Poly& p);
std::vector<Place> places_above(const Curve& curve, const FieldElem& x0);

Place infinite_place();

} // namespace hecc

#endif
