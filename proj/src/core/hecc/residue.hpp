#ifndef HECC_RESIDUE_HPP
#define HECC_RESIDUE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecc/poly.hpp"

namespace hecc {

class ResElem;

// Residue field of a place: base[t]/(m(t)) for a monic irreducible m, with an
// optional quadratic extension by sqrt(delta) on top (inert places). Laurent
// coefficients at a place live here; each element contributes dim() base-field
// coordinates to linear systems.
class ResidueField : public std::enable_shared_from_this<ResidueField> {
public:
    static std::shared_ptr<const ResidueField> make_simple(const Field& base, const Poly& modulus);
    static std::shared_ptr<const ResidueField> make_quadratic(const Field& base, const Poly& modulus,
                                                              const Poly& delta);

    const Field& base() const { return base_; }
    const Poly& modulus() const { return modulus_; }
    bool has_quad() const { return quad_; }
    const Poly& delta() const { return delta_; }
    int dim() const { return (modulus_.degree()) * (quad_ ? 2 : 1); }

    bool same_field(const ResidueField& o) const;

    ResElem zero() const;
    ResElem one() const;
    ResElem from_base(const FieldElem& c) const;
    ResElem from_poly(const Poly& re) const;       // reduced mod m
    ResElem make(const Poly& re, const Poly& im) const;
    ResElem gen() const;      // class of t
    ResElem sqrt_gen() const; // the adjoined sqrt(delta); quad only

private:
    Field base_;
    Poly modulus_;
    bool quad_ = false;
    Poly delta_;
    ResidueField(const Field& b, Poly m, bool q, Poly d)
        : base_(b), modulus_(std::move(m)), quad_(q), delta_(std::move(d)) {}
};

using ResFieldPtr = std::shared_ptr<const ResidueField>;

class ResElem {
public:
    ResElem() = default;

    const ResFieldPtr& field() const { return rf_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    const Poly& re() const { return re_; }
    const Poly& im() const { return im_; }

    ResElem operator+(const ResElem& o) const;
    ResElem operator-(const ResElem& o) const;
    ResElem operator*(const ResElem& o) const;
    ResElem operator/(const ResElem& o) const;
    ResElem operator-() const;
    ResElem inverse() const;
    ResElem pow(const mpz_class& e) const;

    bool operator==(const ResElem& o) const;
    bool operator!=(const ResElem& o) const { return !(*this == o); }

    // base-field coordinates w.r.t. the basis {t^i} (+ {t^i * s} when quad)
    std::vector<FieldElem> coords() const;

    std::string str(const std::string& var = "t") const;

private:
    friend class ResidueField;
    ResFieldPtr rf_;
    Poly re_, im_;
    ResElem(ResFieldPtr rf, Poly re, Poly im)
        : rf_(std::move(rf)), re_(std::move(re)), im_(std::move(im)) {}
    void check_same(const ResElem& o) const;
};

// Exact square root in a simple residue field (no quadratic part).
// Rational base uses resultant + base-field factorization; prime base uses
// the Euler criterion with Tonelli-Shanks over F_{p^d}.
std::optional<ResElem> residue_sqrt(const ResElem& a);

} // namespace hecc

#endif
