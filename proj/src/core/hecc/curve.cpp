#include "hecc/curve.hpp"

#include <sstream>

#include "hecc/factor.hpp"

namespace hecc {

Curve::Curve(const Field& field, const Poly& f) : field_(field), f_(f) {
    if (field.is_prime_field() && field.p == 2)
        throw ValidationError("characteristic 2 is not supported");
    if (f_.is_zero() || f_.field() != field)
        throw ValidationError("curve polynomial must be nonzero over the base field");
    const int d = f_.degree();
    if (d < 5 || d % 2 == 0)
        throw ValidationError("f must have odd degree >= 5 (genus >= 2); got degree " +
                              std::to_string(d));
    if (!is_squarefree(f_))
        throw ValidationError("f must be squarefree (smooth model)");
    genus_ = (d - 1) / 2;
}

std::string Curve::describe() const {
    std::ostringstream out;
    out << "y^2 = " << f_.str() << " over " << field_.describe();
    return out.str();
}

CurvePtr make_curve(const Field& field, const Poly& f) {
    return std::make_shared<const Curve>(field, f);
}

Place Place::infinity() {
    Place p;
    p.kind_ = Kind::Infinity;
    return p;
}

Place infinite_place() { return Place::infinity(); }

Place Place::split(const Poly& minpoly, const Poly& branch) {
    Place p;
    p.kind_ = Kind::Finite;
    p.ftype_ = FiniteType::Split;
    p.minpoly_ = minpoly.monic();
    p.branch_ = branch % p.minpoly_;
    if (p.branch_.is_zero()) throw ContractViolation("split place needs a nonzero branch");
    return p;
}

Place Place::ramified(const Poly& minpoly) {
    Place p;
    p.kind_ = Kind::Finite;
    p.ftype_ = FiniteType::Ramified;
    p.minpoly_ = minpoly.monic();
    return p;
}

Place Place::inert(const Poly& minpoly) {
    Place p;
    p.kind_ = Kind::Finite;
    p.ftype_ = FiniteType::Inert;
    p.minpoly_ = minpoly.monic();
    return p;
}

Place::FiniteType Place::finite_type() const {
    if (kind_ != Kind::Finite) throw ContractViolation("finite_type of the infinite place");
    return ftype_;
}

const Poly& Place::minpoly() const {
    if (kind_ != Kind::Finite) throw ContractViolation("minpoly of the infinite place");
    return minpoly_;
}

const Poly& Place::branch() const {
    if (kind_ != Kind::Finite || ftype_ != FiniteType::Split)
        throw ContractViolation("branch only exists at split places");
    return branch_;
}

int Place::degree() const {
    if (kind_ == Kind::Infinity) return 1;
    const int d = minpoly_.degree();
    return ftype_ == FiniteType::Inert ? 2 * d : d;
}

int Place::ram_index() const {
    if (kind_ == Kind::Infinity) return 2;
    return ftype_ == FiniteType::Ramified ? 2 : 1;
}

ResFieldPtr Place::residue_field(const Curve& curve) const {
    const Field& F = curve.field();
    if (kind_ == Kind::Infinity)
        return ResidueField::make_simple(F, Poly::x(F));
    if (ftype_ == FiniteType::Inert)
        return ResidueField::make_quadratic(F, minpoly_, curve.f() % minpoly_);
    return ResidueField::make_simple(F, minpoly_);
}

bool Place::operator==(const Place& o) const { return cmp(o) == 0; }

int Place::cmp(const Place& o) const {
    if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
    if (kind_ != o.kind_) return kind_ == Kind::Finite ? -1 : 1;
    if (kind_ == Kind::Infinity) return 0;
    const int mc = minpoly_.cmp(o.minpoly_);
    if (mc != 0) return mc;
    if (ftype_ != o.ftype_) return static_cast<int>(ftype_) < static_cast<int>(o.ftype_) ? -1 : 1;
    if (ftype_ == FiniteType::Split) return branch_.cmp(o.branch_);
    return 0;
}

std::string Place::str() const {
    if (kind_ == Kind::Infinity) return "inf";
    std::ostringstream out;
    if (minpoly_.degree() == 1 && ftype_ != FiniteType::Inert) {
        const FieldElem x0 = -minpoly_.coeff(0);
        const FieldElem y0 = ftype_ == FiniteType::Split ? branch_.coeff(0)
                                                         : FieldElem(minpoly_.field(), 0);
        out << "(" << x0.str() << "," << y0.str() << ")";
        return out.str();
    }
    out << "[" << minpoly_.str() << "; ";
    if (ftype_ == FiniteType::Inert) out << "inert";
    else if (ftype_ == FiniteType::Ramified) out << "0";
    else out << branch_.str();
    out << "]";
    return out.str();
}

std::vector<Place> places_above(const Curve& curve, const Poly& p) {
    if (p.degree() < 1) throw ContractViolation("places_above needs a nonconstant polynomial");
    if (p.field() != curve.field()) throw ContractViolation("polynomial over the wrong field");
    Poly m = p.monic();
    if (m.degree() > 1 && !is_irreducible(m))
        throw ContractViolation("places_above requires an irreducible polynomial");

    const Poly fbar = curve.f() % m;
    if (fbar.is_zero()) return {Place::ramified(m)};

    ResFieldPtr L = ResidueField::make_simple(curve.field(), m);
    std::optional<ResElem> b = residue_sqrt(L->from_poly(fbar));
    if (!b) return {Place::inert(m)};

    Place p1 = Place::split(m, b->re());
    Place p2 = Place::split(m, -b->re());
    if (p2 < p1) std::swap(p1, p2);
    return {p1, p2};
}

std::vector<Place> places_above(const Curve& curve, const FieldElem& x0) {
    const Field& F = curve.field();
    Poly m = Poly(F, {-x0, FieldElem(F, 1)});
    return places_above(curve, m);
}

} // namespace hecc
