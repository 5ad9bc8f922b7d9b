#ifndef HECC_SERIES_HPP
#define HECC_SERIES_HPP

#include <vector>

#include "hecc/residue.hpp"

namespace hecc {

// Truncated Laurent series over a residue field: coefficients for exponents
// [lead, prec); exponents >= prec are unknown. Normalized so the first stored
// coefficient is nonzero (a series that is zero to its precision stores no
// coefficients).
class Laurent {
public:
    Laurent(ResFieldPtr rf, int prec) : rf_(std::move(rf)), prec_(prec) {}
    Laurent(ResFieldPtr rf, int lead, std::vector<ResElem> coeffs, int prec);

    static Laurent zero(ResFieldPtr rf, int prec) { return Laurent(std::move(rf), prec); }
    static Laurent monomial(ResFieldPtr rf, const ResElem& c, int exp, int prec);
    static Laurent constant(ResFieldPtr rf, const ResElem& c, int prec);

    const ResFieldPtr& field() const { return rf_; }
    int precision() const { return prec_; }
    bool is_zero_to_prec() const { return c_.empty(); }
    // exact valuation when a nonzero coefficient is stored; otherwise there is
    // none below prec and val_lower_bound() = prec
    int valuation() const;
    int val_lower_bound() const { return c_.empty() ? prec_ : lead_; }

    ResElem coeff(int exp) const; // zero inside the known range, throws beyond prec

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    Laurent scaled(const ResElem& k) const;
    Laurent shifted(int k) const;
    Laurent inverse() const; // needs a known leading coefficient
    Laurent truncated(int prec) const;
    Laurent pow(int n) const; // n >= 0

    std::string str(const std::string& var = "t") const;

private:
    ResFieldPtr rf_;
    int lead_ = 0;
    std::vector<ResElem> c_;
    int prec_ = 0;
    void normalize();
    void check_same(const Laurent& o) const;
};

// Evaluate a base-field polynomial at a Laurent series (coefficients are
// lifted into the series' residue field).
Laurent eval_poly(const Poly& p, const Laurent& at);

} // namespace hecc

#endif
