#include "hecc/residue.hpp"

#include <sstream>

#include "hecc/factor.hpp"

namespace hecc {

ResFieldPtr ResidueField::make_simple(const Field& base, const Poly& modulus) {
    if (modulus.degree() < 1) throw ContractViolation("residue-field modulus must be nonconstant");
    return ResFieldPtr(new ResidueField(base, modulus.monic(), false, Poly(base)));
}

ResFieldPtr ResidueField::make_quadratic(const Field& base, const Poly& modulus, const Poly& delta) {
    if (modulus.degree() < 1) throw ContractViolation("residue-field modulus must be nonconstant");
    Poly m = modulus.monic();
    Poly d = delta % m;
    if (d.is_zero()) throw ContractViolation("quadratic extension by zero");
    return ResFieldPtr(new ResidueField(base, std::move(m), true, std::move(d)));
}

bool ResidueField::same_field(const ResidueField& o) const {
    return base_ == o.base_ && modulus_ == o.modulus_ && quad_ == o.quad_ &&
           (!quad_ || delta_ == o.delta_);
}

ResElem ResidueField::zero() const {
    return ResElem(shared_from_this(), Poly(base_), Poly(base_));
}

ResElem ResidueField::one() const {
    return from_base(FieldElem(base_, 1));
}

ResElem ResidueField::from_base(const FieldElem& c) const {
    return ResElem(shared_from_this(), Poly::constant(c), Poly(base_));
}

ResElem ResidueField::from_poly(const Poly& re) const {
    return ResElem(shared_from_this(), re % modulus_, Poly(base_));
}

ResElem ResidueField::make(const Poly& re, const Poly& im) const {
    if (!im.is_zero() && !quad_) throw ContractViolation("element outside simple residue field");
    return ResElem(shared_from_this(), re % modulus_, im % modulus_);
}

ResElem ResidueField::gen() const {
    return from_poly(Poly::x(base_));
}

ResElem ResidueField::sqrt_gen() const {
    if (!quad_) throw ContractViolation("sqrt_gen on a simple residue field");
    return ResElem(shared_from_this(), Poly(base_), Poly::from_long_coeffs(base_, {1}));
}

void ResElem::check_same(const ResElem& o) const {
    if (!rf_ || !o.rf_) throw ContractViolation("unbound residue element");
    if (!rf_->same_field(*o.rf_)) throw ContractViolation("mixed residue fields");
}

ResElem ResElem::operator+(const ResElem& o) const {
    check_same(o);
    return ResElem(rf_, re_ + o.re_, im_ + o.im_);
}

ResElem ResElem::operator-(const ResElem& o) const {
    check_same(o);
    return ResElem(rf_, re_ - o.re_, im_ - o.im_);
}

ResElem ResElem::operator-() const {
    return ResElem(rf_, -re_, -im_);
}

ResElem ResElem::operator*(const ResElem& o) const {
    check_same(o);
    const Poly& m = rf_->modulus();
    if (!rf_->has_quad())
        return ResElem(rf_, (re_ * o.re_) % m, im_);
    // (a + b s)(c + d s) = (ac + bd*delta) + (ad + bc) s
    Poly re = (re_ * o.re_ + ((im_ * o.im_) % m) * rf_->delta()) % m;
    Poly im = (re_ * o.im_ + im_ * o.re_) % m;
    return ResElem(rf_, std::move(re), std::move(im));
}

ResElem ResElem::inverse() const {
    if (is_zero()) throw ContractViolation("inverse of zero residue element");
    const Poly& m = rf_->modulus();
    if (!rf_->has_quad() || im_.is_zero()) {
        Poly u(rf_->base()), v(rf_->base());
        Poly g = gcd_ext(re_, m, u, v);
        if (g.degree() != 0) throw InternalError("modulus not irreducible");
        Poly inv_re = (u.scaled(g.lc().inverse())) % m;
        return ResElem(rf_, std::move(inv_re), Poly(rf_->base()));
    }
    // (a + b s)^-1 = (a - b s) / (a^2 - b^2 delta); the norm is nonzero since
    // delta is a nonsquare in the simple part
    ResElem conj(rf_, re_, -im_);
    Poly norm = (re_ * re_ - ((im_ * im_) % m) * rf_->delta()) % m;
    ResElem norm_e(rf_, std::move(norm), Poly(rf_->base()));
    return conj * norm_e.inverse();
}

ResElem ResElem::operator/(const ResElem& o) const {
    return *this * o.inverse();
}

ResElem ResElem::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    ResElem r = rf_->one();
    ResElem base = *this;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * base;
        base = base * base;
    }
    return r;
}

bool ResElem::operator==(const ResElem& o) const {
    if (!rf_ || !o.rf_) return !rf_ && !o.rf_;
    return rf_->same_field(*o.rf_) && re_ == o.re_ && im_ == o.im_;
}

std::vector<FieldElem> ResElem::coords() const {
    const int d = rf_->modulus().degree();
    std::vector<FieldElem> out;
    out.reserve(static_cast<size_t>(rf_->dim()));
    for (int i = 0; i < d; ++i) out.push_back(re_.coeff(i));
    if (rf_->has_quad())
        for (int i = 0; i < d; ++i) out.push_back(im_.coeff(i));
    return out;
}

std::string ResElem::str(const std::string& var) const {
    if (!rf_->has_quad() || im_.is_zero()) return re_.str(var);
    std::ostringstream out;
    out << "(" << re_.str(var) << ") + (" << im_.str(var) << ")*s";
    return out.str();
}

namespace {

// ---- polynomials over a residue field (local helper for gcd computations) ----

struct LPoly {
    ResFieldPtr rf;
    std::vector<ResElem> c; // ascending, trimmed

    void trim() { while (!c.empty() && c.back().is_zero()) c.pop_back(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    ResElem coeff(size_t i) const { return i < c.size() ? c[i] : rf->zero(); }
};

LPoly lpoly_sub(const LPoly& a, const LPoly& b) {
    LPoly r{a.rf, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), a.rf->zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

LPoly lpoly_rem(const LPoly& a, const LPoly& d) {
    LPoly r = a;
    const ResElem inv = d.c.back().inverse();
    while (r.degree() >= d.degree() && r.degree() >= 0) {
        const int k = r.degree() - d.degree();
        const ResElem f = r.c.back() * inv;
        for (int i = 0; i <= d.degree(); ++i) {
            const size_t idx = static_cast<size_t>(i + k);
            r.c[idx] = r.c[idx] - f * d.c[static_cast<size_t>(i)];
        }
        r.trim();
    }
    return r;
}

LPoly lpoly_gcd(LPoly a, LPoly b) {
    a.trim();
    b.trim();
    while (!b.c.empty()) {
        LPoly r = lpoly_rem(a, b);
        a = b;
        b = r;
    }
    if (!a.c.empty()) {
        const ResElem inv = a.c.back().inverse();
        for (auto& x : a.c) x = x * inv;
    }
    return a;
}

std::optional<ResElem> sqrt_fp_tower(const ResElem& a) {
    // Tonelli-Shanks over F_{p^d}
    const ResFieldPtr L = a.field();
    const Field& base = L->base();
    const int d = L->modulus().degree();
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(base.p), static_cast<unsigned long>(d));
    if (a.is_zero()) return L->zero();
    if (a.pow((q - 1) / 2) != L->one()) return std::nullopt;

    mpz_class m = q - 1;
    int s = 0;
    while (mpz_even_p(m.get_mpz_t())) { m /= 2; ++s; }

    // deterministic scan for a nonresidue: enumerate elements by base-p digits
    ResElem z = L->zero();
    for (mpz_class n = 1;; ++n) {
        mpz_class rest = n;
        Poly pol(base);
        std::vector<FieldElem> cs;
        while (rest > 0) {
            mpz_class digit = rest % mpz_class(static_cast<unsigned long>(base.p));
            cs.emplace_back(base, digit);
            rest /= static_cast<unsigned long>(base.p);
        }
        ResElem cand = L->from_poly(Poly(base, cs));
        if (cand.is_zero()) continue;
        if (cand.pow((q - 1) / 2) != L->one()) { z = cand; break; }
    }

    ResElem c = z.pow(m);
    ResElem t = a.pow(m);
    ResElem r = a.pow((m + 1) / 2);
    int mm = s;
    while (!(t == L->one())) {
        int i = 0;
        ResElem tt = t;
        while (!(tt == L->one())) { tt = tt * tt; ++i; }
        ResElem b = c;
        for (int j = 0; j < mm - i - 1; ++j) b = b * b;
        mm = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    return r;
}

std::optional<ResElem> sqrt_q_numberfield(const ResElem& a) {
    // root of y^2 = a in Q[t]/(m) via: characteristic polynomial of
    // sqrt(a) + c*t  (a resultant in t), factored over Q, then a gcd over the
    // residue field to pull out a linear factor. Some shifts c can be
    // ambiguous (conjugate collisions); at most d of them, so c <= d suffices.
    const ResFieldPtr L = a.field();
    const Field F = L->base();
    const Poly& m = L->modulus();
    const int d = m.degree();
    const ResElem tau = L->gen();

    if (a.is_zero()) return L->zero();

    for (int c = 0; c <= d; ++c) {
        // M(y) = Res_t(m(t), (y - c t)^2 - a(t)), degree 2d in y, by interpolation
        std::vector<FieldElem> xs, ys;
        for (int j = 0; j <= 2 * d; ++j) {
            FieldElem y0(F, j);
            // g(t) = (y0 - c t)^2 - a(t)
            Poly lin = Poly::constant(y0) - Poly::from_long_coeffs(F, {0, c});
            Poly g = lin * lin - a.re();
            xs.push_back(y0);
            ys.push_back(resultant(m, g));
        }
        Poly M = interpolate(F, xs, ys);
        if (M.is_zero()) continue; // degenerate shift
        for (const auto& fac : factor(M)) {
            // gcd over L[y] of fac(y) and (y - c*tau)^2 - a
            LPoly A{L, {}};
            for (int i = 0; i <= fac.p.degree(); ++i) A.c.push_back(L->from_base(fac.p.coeff(i)));
            A.trim();
            LPoly B{L, {}};
            ResElem ct = tau * L->from_base(FieldElem(F, c));
            B.c = {ct * ct - a, -(ct + ct), L->one()};
            LPoly g = lpoly_gcd(A, B);
            if (g.degree() == 1) {
                ResElem beta = -(g.c[0] / g.c[1]);
                ResElem b0 = beta - ct;
                if (b0 * b0 == a) return b0;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<ResElem> residue_sqrt(const ResElem& a) {
    if (a.field()->has_quad()) throw ContractViolation("residue_sqrt expects a simple residue field");
    const Field& base = a.field()->base();
    if (a.field()->modulus().degree() == 1 ) {
        // constants: delegate to the base field
        FieldElem v = a.re().coeff(0), r(base, 0);
        if (!v.sqrt(r)) return std::nullopt;
        return a.field()->from_base(r);
    }
    return base.is_prime_field() ? sqrt_fp_tower(a) : sqrt_q_numberfield(a);
}

} // namespace hecc
