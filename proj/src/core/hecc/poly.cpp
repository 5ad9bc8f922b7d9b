#include "hecc/poly.hpp"

#include <sstream>

namespace hecc {

Poly::Poly(const Field& f, std::vector<FieldElem> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.field() != f) throw ContractViolation("coefficient field mismatch");
    trim();
}

Poly Poly::constant(const FieldElem& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

Poly Poly::from_long_coeffs(const Field& f, const std::vector<long>& ascending) {
    std::vector<FieldElem> v;
    v.reserve(ascending.size());
    for (long a : ascending) v.emplace_back(f, a);
    return Poly(f, std::move(v));
}

Poly Poly::monomial(const Field& f, int degree, const FieldElem& c) {
    Poly p(f);
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(degree) + 1, FieldElem(f, 0));
    p.c_.back() = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    if (field_ != o.field_) throw ContractViolation("mixed fields in polynomial arithmetic");
}

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElem(field_, 0);
    return c_[static_cast<size_t>(i)];
}

const FieldElem& Poly::lc() const {
    if (c_.empty()) throw ContractViolation("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElem(field_, 0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Poly(field_);
    Poly r(field_);
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem(field_, 0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const FieldElem& c) const {
    Poly r = *this;
    if (c.is_zero()) return Poly(field_);
    for (auto& x : r.c_) x = x * c;
    return r;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw ContractViolation("negative shift");
    if (is_zero()) return *this;
    Poly r(field_);
    r.c_.assign(c_.size() + static_cast<size_t>(k), FieldElem(field_, 0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
}

void Poly::divrem(const Poly& d, Poly& q, Poly& r) const {
    check_same(d);
    if (d.is_zero()) throw ContractViolation("division by zero polynomial");
    q = Poly(field_);
    r = *this;
    const FieldElem inv_lc = d.lc().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int k = r.degree() - d.degree();
        const FieldElem f = r.lc() * inv_lc;
        q = q + Poly::monomial(field_, k, f);
        r = r - d.shifted(k).scaled(f);
    }
}

Poly Poly::operator/(const Poly& d) const {
    Poly q(field_), r(field_);
    divrem(d, q, r);
    return q;
}

Poly Poly::operator%(const Poly& d) const {
    Poly q(field_), r(field_);
    divrem(d, q, r);
    return r;
}

bool Poly::divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return (other % *this).is_zero();
}

Poly Poly::derivative() const {
    Poly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1, FieldElem(field_, 0));
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * FieldElem(field_, static_cast<long>(i));
    r.trim();
    return r;
}

Poly Poly::monic() const {
    return scaled(lc().inverse());
}

FieldElem Poly::eval(const FieldElem& at) const {
    FieldElem acc(field_, 0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && c_.size() == o.c_.size() &&
           std::equal(c_.begin(), c_.end(), o.c_.begin());
}

int Poly::cmp(const Poly& o) const {
    check_same(o);
    if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
    for (int i = degree(); i >= 0; --i) {
        const int c = coeff(i).cmp(o.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FieldElem c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { out << "-"; cs = cs.substr(1); }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        const bool unit = (cs == "1");
        if (i == 0) {
            out << cs;
        } else {
            if (!unit) out << cs << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

Poly gcd_ext(const Poly& a, const Poly& b, Poly& u, Poly& v) {
    const Field& F = a.field();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::from_long_coeffs(F, {1}), u1(F);
    Poly v0(F), v1 = Poly::from_long_coeffs(F, {1});
    while (!r1.is_zero()) {
        Poly q(F), r(F);
        r0.divrem(r1, q, r);
        Poly un = u0 - q * u1, vn = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = un;
        v0 = v1; v1 = vn;
    }
    if (r0.is_zero()) { u = u0; v = v0; return r0; }
    const FieldElem s = r0.lc().inverse();
    u = u0.scaled(s);
    v = v0.scaled(s);
    return r0.scaled(s);
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw ContractViolation("squarefree test on zero polynomial");
    if (f.degree() == 0) return true;
    Poly d = f.derivative();
    if (d.is_zero()) return false; // p-th power in characteristic p
    return gcd(f, d).degree() == 0;
}

int ord_at(const Poly& f, const Poly& p) {
    if (f.is_zero()) throw ContractViolation("ord of zero polynomial");
    if (p.degree() < 1) throw ContractViolation("ord at a constant");
    int k = 0;
    Poly g = f;
    for (;;) {
        Poly q(f.field()), r(f.field());
        g.divrem(p, q, r);
        if (!r.is_zero()) return k;
        ++k;
        g = q;
    }
}

FieldElem resultant(const Poly& a, const Poly& b) {
    const Field& F = a.field();
    if (a.is_zero() || b.is_zero()) return FieldElem(F, 0);
    Poly x = a, y = b;
    FieldElem acc(F, 1);
    bool negate = false;
    while (y.degree() > 0) {
        Poly r = x % y;
        if (r.is_zero()) return FieldElem(F, 0);
        // res(x, y) = (-1)^(deg x * deg y) lc(y)^(deg x - deg r) res(y, r)
        if ((x.degree() & 1) && (y.degree() & 1)) negate = !negate;
        FieldElem l(F, 1);
        for (int i = 0; i < x.degree() - r.degree(); ++i) l = l * y.lc();
        acc = acc * l;
        x = y;
        y = r;
    }
    // y is a nonzero constant now
    FieldElem l(F, 1);
    for (int i = 0; i < x.degree(); ++i) l = l * y.lc();
    acc = acc * l;
    return negate ? -acc : acc;
}

Poly interpolate(const Field& f, const std::vector<FieldElem>& xs,
                 const std::vector<FieldElem>& ys) {
    if (xs.size() != ys.size()) throw ContractViolation("interpolation size mismatch");
    Poly acc(f);
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly num = Poly::from_long_coeffs(f, {1});
        FieldElem den(f, 1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            num = num * Poly(f, {-xs[j], FieldElem(f, 1)});
            den = den * (xs[i] - xs[j]);
        }
        acc = acc + num.scaled(ys[i] / den);
    }
    return acc;
}

} // namespace hecc
