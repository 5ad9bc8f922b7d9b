#include "hecc/series.hpp"

#include <sstream>

namespace hecc {

Laurent::Laurent(ResFieldPtr rf, int lead, std::vector<ResElem> coeffs, int prec)
    : rf_(std::move(rf)), lead_(lead), c_(std::move(coeffs)), prec_(prec) {
    if (lead_ + static_cast<int>(c_.size()) > prec_)
        c_.resize(static_cast<size_t>(prec_ - lead_ > 0 ? prec_ - lead_ : 0), rf_->zero());
    normalize();
}

Laurent Laurent::monomial(ResFieldPtr rf, const ResElem& c, int exp, int prec) {
    if (exp >= prec) return zero(std::move(rf), prec);
    return Laurent(std::move(rf), exp, {c}, prec);
}

Laurent Laurent::constant(ResFieldPtr rf, const ResElem& c, int prec) {
    return monomial(std::move(rf), c, 0, prec);
}

void Laurent::normalize() {
    size_t skip = 0;
    while (skip < c_.size() && c_[skip].is_zero()) ++skip;
    if (skip) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(skip));
        lead_ += static_cast<int>(skip);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) lead_ = 0;
}

void Laurent::check_same(const Laurent& o) const {
    if (!rf_->same_field(*o.rf_)) throw ContractViolation("mixed residue fields in series");
}

int Laurent::valuation() const {
    if (c_.empty()) throw ContractViolation("valuation of a series with no known coefficient");
    return lead_;
}

ResElem Laurent::coeff(int exp) const {
    if (exp >= prec_) throw ContractViolation("coefficient beyond series precision");
    if (c_.empty() || exp < lead_ || exp >= lead_ + static_cast<int>(c_.size()))
        return rf_->zero();
    return c_[static_cast<size_t>(exp - lead_)];
}

Laurent Laurent::operator+(const Laurent& o) const {
    check_same(o);
    const int prec = std::min(prec_, o.prec_);
    if (c_.empty() && o.c_.empty()) return zero(rf_, prec);
    const int lo = std::min(val_lower_bound(), o.val_lower_bound());
    std::vector<ResElem> v;
    for (int e = lo; e < prec; ++e) v.push_back(coeff(e) + o.coeff(e));
    return Laurent(rf_, lo, std::move(v), prec);
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    check_same(o);
    const int prec = std::min(val_lower_bound() + o.prec_, o.val_lower_bound() + prec_);
    if (c_.empty() || o.c_.empty()) return zero(rf_, prec);
    const int lo = lead_ + o.lead_;
    const int n = prec - lo;
    if (n <= 0) return zero(rf_, prec);
    std::vector<ResElem> v(static_cast<size_t>(n), rf_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            const size_t k = i + j;
            if (k >= static_cast<size_t>(n)) break;
            v[k] = v[k] + c_[i] * o.c_[j];
        }
    }
    return Laurent(rf_, lo, std::move(v), prec);
}

Laurent Laurent::scaled(const ResElem& k) const {
    if (k.is_zero()) return zero(rf_, prec_);
    Laurent r = *this;
    for (auto& x : r.c_) x = x * k;
    r.normalize();
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r = *this;
    r.lead_ += k;
    r.prec_ += k;
    return r;
}

Laurent Laurent::inverse() const {
    if (c_.empty())
        throw ContractViolation("inverse of a series with no known leading term");
    const int v = lead_;
    const int n = prec_ - v; // relative precision carries over
    const ResElem u0 = c_[0].inverse();
    std::vector<ResElem> w(static_cast<size_t>(n), rf_->zero());
    w[0] = u0;
    for (int k = 1; k < n; ++k) {
        ResElem acc = rf_->zero();
        for (int j = 1; j <= k; ++j) {
            if (j < static_cast<int>(c_.size()))
                acc = acc + c_[static_cast<size_t>(j)] * w[static_cast<size_t>(k - j)];
        }
        w[static_cast<size_t>(k)] = -(u0 * acc);
    }
    return Laurent(rf_, -v, std::move(w), -v + n);
}

Laurent Laurent::truncated(int prec) const {
    if (prec >= prec_) return *this;
    Laurent r = *this;
    r.prec_ = prec;
    if (!r.c_.empty()) {
        const int keep = prec - r.lead_;
        if (keep <= 0) r.c_.clear();
        else if (keep < static_cast<int>(r.c_.size())) r.c_.resize(static_cast<size_t>(keep));
    }
    r.normalize();
    return r;
}

Laurent Laurent::pow(int n) const {
    if (n < 0) throw ContractViolation("negative series power");
    constexpr int kBig = 1 << 28;
    Laurent r = constant(rf_, rf_->one(), kBig);
    Laurent base = *this;
    // plain iterated multiplication keeps precision bookkeeping simple
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

std::string Laurent::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const int e = lead_ + static_cast<int>(i);
        out << "(" << c_[i].str() << ")*" << var << "^" << e;
    }
    if (first) out << "0";
    out << " + O(" << var << "^" << prec_ << ")";
    return out.str();
}

Laurent eval_poly(const Poly& p, const Laurent& at) {
    const ResFieldPtr& rf = at.field();
    constexpr int kBig = 1 << 28; // effectively-exact precision for constants
    Laurent acc = Laurent::zero(rf, kBig);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * at;
        acc = acc + Laurent::constant(rf, rf->from_base(p.coeff(i)), kBig);
    }
    return acc;
}

} // namespace hecc
