#include "hecc/function.hpp"

#include <climits>
#include <sstream>

#include "hecc/factor.hpp"

namespace hecc {

FunctionElement::FunctionElement(CurvePtr curve, const Poly& a, const Poly& b, const Poly& c)
    : curve_(std::move(curve)), a_(a), b_(b), c_(c) {
    if (!curve_) throw ContractViolation("function element needs a curve");
    if (c_.is_zero()) throw ContractViolation("zero denominator in function element");
    normalize();
}

void FunctionElement::normalize() {
    Poly g = gcd(gcd(a_, b_), c_);
    if (g.degree() > 0) {
        a_ = a_ / g;
        b_ = b_ / g;
        c_ = c_ / g;
    }
    const FieldElem inv = c_.lc().inverse();
    a_ = a_.scaled(inv);
    b_ = b_.scaled(inv);
    c_ = c_.monic();
    if (a_.is_zero() && b_.is_zero()) c_ = Poly::from_long_coeffs(c_.field(), {1});
}

FunctionElement FunctionElement::zero(CurvePtr curve) {
    const Field F = curve->field();
    return FunctionElement(std::move(curve), Poly(F), Poly(F), Poly::from_long_coeffs(F, {1}));
}

FunctionElement FunctionElement::one(CurvePtr curve) {
    const Field F = curve->field();
    return FunctionElement(std::move(curve), Poly::from_long_coeffs(F, {1}), Poly(F),
                           Poly::from_long_coeffs(F, {1}));
}

FunctionElement FunctionElement::from_constant(CurvePtr curve, const FieldElem& v) {
    const Field F = curve->field();
    return FunctionElement(std::move(curve), Poly::constant(v), Poly(F),
                           Poly::from_long_coeffs(F, {1}));
}

FunctionElement FunctionElement::coordinate_x(CurvePtr curve) {
    const Field F = curve->field();
    return FunctionElement(std::move(curve), Poly::x(F), Poly(F), Poly::from_long_coeffs(F, {1}));
}

FunctionElement FunctionElement::coordinate_y(CurvePtr curve) {
    const Field F = curve->field();
    return FunctionElement(std::move(curve), Poly(F), Poly::from_long_coeffs(F, {1}),
                           Poly::from_long_coeffs(F, {1}));
}

void FunctionElement::check_same(const FunctionElement& o) const {
    if (!curve_->same_curve(*o.curve_))
        throw ContractViolation("function elements on different curves");
}

FunctionElement FunctionElement::operator+(const FunctionElement& o) const {
    check_same(o);
    return FunctionElement(curve_, a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_);
}

FunctionElement FunctionElement::operator-(const FunctionElement& o) const {
    return *this + (-o);
}

FunctionElement FunctionElement::operator-() const {
    FunctionElement r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

FunctionElement FunctionElement::operator*(const FunctionElement& o) const {
    check_same(o);
    // (a1 + b1 y)(a2 + b2 y) = a1 a2 + b1 b2 f + (a1 b2 + a2 b1) y
    Poly a = a_ * o.a_ + (b_ * o.b_) * curve_->f();
    Poly b = a_ * o.b_ + o.a_ * b_;
    return FunctionElement(curve_, a, b, c_ * o.c_);
}

FunctionElement FunctionElement::inverse() const {
    if (is_zero()) throw ContractViolation("inverse of the zero function");
    // 1/((a + b y)/c) = c (a - b y) / (a^2 - b^2 f)
    Poly n = a_ * a_ - (b_ * b_) * curve_->f();
    return FunctionElement(curve_, c_ * a_, -(c_ * b_), n);
}

FunctionElement FunctionElement::operator/(const FunctionElement& o) const {
    return *this * o.inverse();
}

FunctionElement FunctionElement::scaled(const FieldElem& k) const {
    return FunctionElement(curve_, a_.scaled(k), b_.scaled(k), c_);
}

bool FunctionElement::operator==(const FunctionElement& o) const {
    return curve_->same_curve(*o.curve_) && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

std::string FunctionElement::str() const {
    std::ostringstream out;
    if (is_zero()) return "0";
    std::string num;
    if (b_.is_zero()) {
        num = a_.str();
        if (a_.degree() > 0 && !c_.is_one()) num = "(" + num + ")";
    } else {
        std::ostringstream n;
        if (!a_.is_zero()) n << a_.str() << " + ";
        if (b_.is_one()) n << "y";
        else n << "(" << b_.str() << ")*y";
        num = n.str();
        if (!c_.is_one() || !a_.is_zero()) num = "(" + num + ")";
    }
    out << num;
    if (!c_.is_one()) out << "/(" << c_.str() << ")";
    return out.str();
}

namespace {

constexpr long kInfinite = LONG_MAX / 4;

// valuation of the regular function a + b*y at a place
long val_regular(const Curve& curve, const Poly& a, const Poly& b, const Place& pl) {
    if (a.is_zero() && b.is_zero()) throw ContractViolation("valuation of zero");
    const int g = curve.genus();
    if (pl.is_infinity()) {
        long va = a.is_zero() ? kInfinite : -2L * a.degree();
        long vb = b.is_zero() ? kInfinite : -2L * b.degree() - (2 * g + 1);
        return std::min(va, vb);
    }
    const Poly& p = pl.minpoly();
    switch (pl.finite_type()) {
    case Place::FiniteType::Ramified: {
        long va = a.is_zero() ? kInfinite : 2L * ord_at(a, p);
        long vb = b.is_zero() ? kInfinite : 2L * ord_at(b, p) + 1;
        return std::min(va, vb);
    }
    case Place::FiniteType::Inert: {
        if (b.is_zero()) return ord_at(a, p);
        if (a.is_zero()) return ord_at(b, p); // y is a unit at inert places
        Poly n = a * a - (b * b) * curve.f();
        long m = ord_at(n, p);
        if (m % 2 != 0) throw InternalError("odd norm valuation at an inert place");
        return m / 2;
    }
    case Place::FiniteType::Split: {
        if (b.is_zero()) return ord_at(a, p);
        if (a.is_zero()) return ord_at(b, p);
        Poly n = a * a - (b * b) * curve.f();
        long m = ord_at(n, p);
        Poly bb = lift_branch(curve, pl, static_cast<int>(m) + 1);
        Poly s = a + b * bb;
        if (s.is_zero()) throw InternalError("vanishing branch combination");
        long v = ord_at(s, p);
        if (v > m) throw InternalError("branch lift precision too low");
        return v;
    }
    }
    throw InternalError("unreachable");
}

} // namespace

Poly lift_branch(const Curve& curve, const Place& pl, int prec) {
    if (pl.is_infinity() || pl.finite_type() != Place::FiniteType::Split)
        throw ContractViolation("branch lift only at split places");
    const Field& F = curve.field();
    const Poly& p = pl.minpoly();
    const FieldElem half = FieldElem(F, 2).inverse();

    Poly b = pl.branch();
    int have = 1;
    Poly pk = p;
    while (have < prec) {
        have = std::min(2 * have, prec);
        // pk = p^have
        pk = Poly::from_long_coeffs(F, {1});
        for (int i = 0; i < have; ++i) pk = pk * p;
        // b <- (b + f/b) / 2  mod p^have
        Poly u(F), v(F);
        Poly g = gcd_ext(b % pk, pk, u, v);
        if (g.degree() != 0) throw InternalError("branch not invertible");
        Poly binv = u % pk;
        b = ((b + (curve.f() * binv) % pk) % pk).scaled(half);
        b = b % pk;
    }
    return b;
}

long valuation(const FunctionElement& h, const Place& pl) {
    if (h.is_zero()) throw ContractViolation("valuation of the zero function");
    const Curve& curve = *h.curve();
    long vnum = val_regular(curve, h.a(), h.b(), pl);
    long vden;
    if (pl.is_infinity()) {
        vden = -2L * h.c().degree();
    } else {
        vden = static_cast<long>(pl.ram_index()) * ord_at(h.c(), pl.minpoly());
    }
    return vnum - vden;
}

Divisor divisor_of(const FunctionElement& h) {
    if (h.is_zero()) throw ContractViolation("divisor of the zero function");
    const CurvePtr& curve = h.curve();
    Divisor d(curve);

    // denominator contributions (c is a pure polynomial in x)
    if (h.c().degree() > 0) {
        for (const auto& fac : factor(h.c()))
            for (const Place& pl : places_above(*curve, fac.p))
                d.add_term(pl, -static_cast<long>(pl.ram_index()) * fac.mult);
    }
    d.add_term(Place::infinity(), 2L * h.c().degree());

    // numerator zeros lie over the irreducible factors of the norm a^2 - b^2 f
    Poly norm = h.b().is_zero() ? h.a()
                                : h.a() * h.a() - (h.b() * h.b()) * curve->f();
    if (norm.degree() > 0) {
        for (const auto& fac : factor(norm)) {
            for (const Place& pl : places_above(*curve, fac.p)) {
                long v = val_regular(*curve, h.a(), h.b(), pl);
                d.add_term(pl, v);
            }
        }
    }
    d.add_term(Place::infinity(), val_regular(*curve, h.a(), h.b(), Place::infinity()));

    if (d.degree() != 0) throw InternalError("principal divisor has nonzero degree");
    return d;
}

Divisor canonical_divisor(CurvePtr curve) {
    const long g = curve->genus();
    return Divisor::single(std::move(curve), Place::infinity(), 2 * g - 2);
}

} // namespace hecc
