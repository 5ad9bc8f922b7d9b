#include "hecc/divisor.hpp"

#include <sstream>

namespace hecc {

Divisor::Divisor(CurvePtr curve) : curve_(std::move(curve)) {
    if (!curve_) throw ContractViolation("divisor needs a curve");
}

Divisor Divisor::single(CurvePtr curve, const Place& p, long mult) {
    Divisor d(std::move(curve));
    d.add_term(p, mult);
    return d;
}

void Divisor::check_same(const Divisor& o) const {
    if (!curve_->same_curve(*o.curve_))
        throw ContractViolation("divisors on different curves");
}

long Divisor::mult_of(const Place& p) const {
    auto it = m_.find(p);
    return it == m_.end() ? 0 : it->second;
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [p, m] : m_) d += m * p.degree();
    return d;
}

std::vector<Place> Divisor::support() const {
    std::vector<Place> s;
    s.reserve(m_.size());
    for (const auto& [p, m] : m_) s.push_back(p);
    return s;
}

bool Divisor::is_effective() const {
    for (const auto& [p, m] : m_)
        if (m < 0) return false;
    return true;
}

Divisor& Divisor::add_term(const Place& p, long mult) {
    if (mult == 0) return *this;
    auto [it, fresh] = m_.emplace(p, mult);
    if (!fresh) {
        it->second += mult;
        if (it->second == 0) m_.erase(it);
    }
    return *this;
}

Divisor Divisor::operator+(const Divisor& o) const {
    check_same(o);
    Divisor r = *this;
    for (const auto& [p, m] : o.m_) r.add_term(p, m);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::operator-() const {
    Divisor r(curve_);
    for (const auto& [p, m] : m_) r.m_.emplace(p, -m);
    return r;
}

Divisor Divisor::scaled(long k) const {
    Divisor r(curve_);
    if (k == 0) return r;
    for (const auto& [p, m] : m_) r.m_.emplace(p, m * k);
    return r;
}

bool Divisor::operator==(const Divisor& o) const {
    return curve_->same_curve(*o.curve_) && m_ == o.m_;
}

bool Divisor::leq(const Divisor& o) const {
    return (o - *this).is_effective();
}

std::string Divisor::str() const {
    if (m_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, m] : m_) {
        long a = m;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out << a << "*";
        out << p.str();
    }
    return out.str();
}

} // namespace hecc
